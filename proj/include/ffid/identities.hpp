#pragma once
// Scalar and matrix multiple sums built on the factorization coefficients L_i,
// the coefficient table of the product of f_d factors, and exact checks of the
// resulting identities among truncated polylogarithms and power sums.

#include <map>
#include <vector>

#include "ffid/carlitz.hpp"
#include "ffid/checks.hpp"
#include "ffid/mzv.hpp"

namespace ffid {

// f_d(x,y,z) = sum_{j<d} (z-y)^j (x-y)^{d-1-j}, evaluated in K
RatK fd_value(const RatK& x, const RatK& y, const RatK& z, int d);

// coefficients c_m of prod_{j=1..r} f_d(theta^{q^{j-1}}, y_j, theta^{q^r}) in the monomials y^m
struct CmTable {
    int d = 0, r = 0;
    std::map<std::vector<int>, RatK> c;
};
CmTable cm_expansion(const Field& F, int d, int r);

class MultiSums {
public:
    explicit MultiSums(CarlitzModel& cm);
    CarlitzModel& model() { return cm_; }
    const Field& field() const { return cm_.field(); }
    int dim() const { return cm_.dim(); }
    LSums& lsums() { return L_; }

    // [m] with [0] = 1
    RatK bracket(int m) { return cm_.seq().bracket(m); }
    RatK lambda(int i, int j);
    RatK mu(int i, int j);
    // lambda_{<k}(m) through its recursion, and straight from the nested definition
    const RatK& lambda_lt(int k, int m);
    RatK lambda_lt_direct(int k, int m);
    // L_{<k}(m) through its recursion, from the nested definition, and (-1)^m Gamma_k^{-1} Q_m Gamma_{k-m}^{(m)}
    const MatK& matrix_lt(int k, int m);
    MatK matrix_lt_direct(int k, int m);
    MatK matrix_lt_closed(int k, int m);
    // U_{k,m} = [m]^{1-d} l_k^{-d} Gamma_k^{-1} (1, [m], ..., [m]^{d-1})^T
    MatK U(int k, int m);

    // alpha_{h,j} = C(d,h) (theta - theta^q)^h f_{d-h}(theta, theta^q, theta^{q^j})
    RatK alpha(int h, int j);
    // c_h = ((d-h)(q-1), (q-1)^{*h})
    ArrayComb c_array(int h);
    // sum over h of alpha_{h_1,m} alpha_{h_2,m-1}^q ... (d) |> c_{h_1} |> c_{h_2}^{*q} |> ..., times (-1)^m D_m;
    // its L_k equals l_{k-m}^{-d q^m}
    ArrayComb identity_scalar_expansion(int m);

private:
    CarlitzModel& cm_;
    LSums L_;
    std::map<std::pair<int, int>, RatK> lam_, lamlt_;
    std::map<std::pair<int, int>, MatK> matlt_;
};

// theo1, theo2, the closed matrix form, id1, id2, lemma2 and the recursions for one (k, m)
std::vector<Check> verify_nathan(MultiSums& ms, int k, int m);
// the finite form of Theorem C for one (r, k), both with the collected factor D_{r-1}^{-q(d-1)}
// and as printed without it; the second Check is informational
std::vector<Check> verify_thmC_finite(MultiSums& ms, int r, int k);
// L_{k-m}(d q^m) against L_k of the explicit array expansion, plus its weight bookkeeping
std::vector<Check> verify_identity_scalar(MultiSums& ms, int k, int m);
// the depth-one chain: decomposition of mu_{i,j}, the crucial formula, the telescoped sum,
// and Thakur's power-sum identity by enumeration when d <= q and k <= kenum
std::vector<Check> depth_one_suite(MultiSums& ms, int imax, int kenum);
// delta_1 of the bottom coordinates of both collected forms of I_i(w e_{1,d}) against the scalar identity
std::vector<Check> delta1_bridge(MultiSums& ms, int imax, int instances, std::uint64_t seed);

}  // namespace ffid
