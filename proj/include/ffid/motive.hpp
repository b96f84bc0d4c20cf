#pragma once
// The t-motive M and dual t-motive N of C^{(x)d} over K: the delta_0 maps,
// the pairings E_l, E_l', F_l, the operators L_k, the series I_i and the
// finite delta_1 map.
//
// Elements of M are polynomials in t. An element of N is stored as p^{(-e)}
// with p a polynomial, so sigma_N never needs q-th roots; every twisted
// delta_0 term is rewritten as a Taylor expansion of a K-rational function.

#include <stdexcept>
#include <vector>

#include "ffid/carlitz.hpp"
#include "ffid/polyt.hpp"

namespace ffid {

struct ExpansionNonTerminating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p^{(-e)} in the dual motive
struct NElem {
    PolyT p;
    int e = 0;
};

// tau_M m = (t - theta)^d m^{(1)}; tau_M^k m = b_k^d m^{(k)}
PolyT tau_M(const PolyT& m, int d, int k = 1);
// sigma_N n = (t - theta)^d n^{(-1)}
NElem sigma_N(const NElem& n, int d);
// c(t) * n for c in K[t]
NElem n_mul(const PolyT& c, const NElem& n);
NElem n_add(const NElem& a, const NElem& b);

// (m(theta), D_1 m(theta), ..., D_{d-1} m(theta))^T
MatK delta0_M(const PolyT& m, int d);
// (D_{d-1} n(theta), ..., n(theta))^T
MatK delta0_N(const PolyT& n, int d);
// delta0_N(p^{(-e)})^{(e)}: Taylor data of p at theta^{q^e}, reversed
MatK delta0_N_twisted(const NElem& n, int d);

// delta_0^M(tau_M^{-j} m)^{(j)}: Taylor data of m / b_j^d at theta^{q^j}
MatK twisted_pair_term_M(const PolyT& m, int j, int d);
// delta_0^N(sigma_N^{j-l}(n))^{(j)}, or with n^{(-l)} in place of n when prime
MatK twisted_pair_term_N(const NElem& n, int j, int l, int d, bool prime);

// g_k = (t - theta)^{k-1} and h_k = (t - theta)^{d-k}, k = 1..d
std::vector<PolyT> basis_g(const Field& F, int d);
std::vector<NElem> basis_h(const Field& F, int d);

enum class Pairing { Plain, Prime, F };

// E_l(x, y; W) with xg[k] = x g_k and yh[m] = y h_m precomputed
MatK pair_E(CarlitzModel& cm, int l, const std::vector<PolyT>& xg, const std::vector<NElem>& yh, const MatK& W,
            Pairing v = Pairing::Plain);
// x = y = 1
MatK pair_E(CarlitzModel& cm, int l, const MatK& W, Pairing v = Pairing::Plain);
// sum_j Q_j W^{(j)} P_{l-j}^{(j)}
MatK carlitz_operator(CarlitzModel& cm, int l, const MatK& W);

// L_k(W) = Gamma_k^{-1} M_{k+1} H^perp Gamma_k^{(1)} W^{(1)} H with H = H_{theta^q, theta}
MatK L_operator(CarlitzModel& cm, int k, const MatK& W);
// (1 - L_{l-1}) o ... o (1 - L_0)(W)
MatK F_by_factorization(CarlitzModel& cm, int l, const MatK& W);

// the column (b_k^d, b_k^{d-1} b_{k+1}, ..., b_k b_{k+1}^{d-1})^T
VecT b_vector(const Field& F, int d, int k);

// I_i(W) = sum_k E_k(W) b_k computed three ways
VecT I_series_direct(CarlitzModel& cm, int i, const MatK& W);
// sum_m Q_m W^{(m)} tau_M^m(sum_{n <= i-m} P_n b_n)
VecT I_series_by_Q(CarlitzModel& cm, int i, const MatK& W);
// sum_m (-1)^m sum_{n=m}^{i} Gamma_n sum_{i_1<...<i_m<n} (L_{i_m} o ... o L_{i_1})(W) H_{theta,theta^{q^n}} b_n
VecT I_series_by_factorization(CarlitzModel& cm, int i, const MatK& W);
// the summands of the two collected forms carrying W^{(m)}
VecT I_piece_Q(CarlitzModel& cm, int i, int m, const MatK& W);
VecT I_piece_factorization(CarlitzModel& cm, int i, int m, const MatK& W);

// coefficients a^j (columns of size d) of m = sum_j sum_i a_i^j tau_M^j (t - theta)^i
std::vector<MatK> tau_expansion(const PolyT& m, int d, int jmax = 256);
// sum_j (a^j)^T z^{(j)}
RatK delta1_finite(const PolyT& m, const MatK& z, int d, int jmax = 256);

std::vector<Check> motive_suite(int q, int d, int lmax, int instances, std::uint64_t seed);

}  // namespace ffid
