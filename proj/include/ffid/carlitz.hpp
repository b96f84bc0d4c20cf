#pragma once
// The tensor power C^{(x)d} of Carlitz's module: classical sequences, the
// exponential and logarithm coefficients, the normalizing matrices Gamma_k,
// the factorization coefficients L_i and the normalized operators E_k.

#include <deque>
#include <map>
#include <vector>

#include "ffid/checks.hpp"
#include "ffid/matk.hpp"
#include "ffid/skew.hpp"

namespace ffid {

// D_k, l_k and [m], memoized.
class ClassicalSeq {
public:
    explicit ClassicalSeq(const Field& F) : F_(&F) {}
    const RatK& D(int k);
    const RatK& l(int k);
    // [m] = theta^{q^m} - theta, [0] = 1
    RatK bracket(int m) const;

private:
    const Field* F_;
    std::deque<RatK> D_, l_;
};

// Lazily evaluated model for fixed (q, d). The caches make it unsafe to share
// one instance between threads; parallel callers build their own.
class CarlitzModel {
public:
    CarlitzModel(const Field& F, int d);
    CarlitzModel(int q, int d) : CarlitzModel(Field::get(q), d) {}

    const Field& field() const { return *F_; }
    int q() const { return F_->q; }
    int dim() const { return d_; }
    ClassicalSeq& seq() { return seq_; }

    const RatK& theta_q(int k);  // theta^{q^k}
    // theta + N + e_{d,1} tau
    SkewPoly C_theta() const;

    const MatK& Q(int i);
    const MatK& P(int i);
    // T_i(theta^{q^i}, theta): jet at theta^{q^i} of prod_{j<i} (x - theta^{q^j})^{-d}
    MatK T_at_qi(int i);
    // Gamma_k = T_k(theta, theta^q) and its inverse
    const MatK& Gamma(int k);
    const MatK& Gamma_inv(int k);
    // Gamma_k^{(j)}, memoized
    const MatK& Gamma_tw(int k, int j);

    // L_i; the cached value comes from the Gamma-conjugated Delta(f_d) form
    const MatK& L(int i);
    // L_i^{(j)}, memoized
    const MatK& L_tw(int i, int j);
    // the three independent constructions of L_i
    MatK L_by_delta(int i);   // Delta(f_d * ratio^d) at the evaluation point
    MatK L_by_gamma(int i);   // Gamma_i^{-1} Delta(f_d) Gamma_i^{(1)}
    MatK L_by_m(int i);       // Gamma_i^{-1} M_{i+1} H^perp Gamma_i^{(1)}

    // Delta_{x,z}(f_d) at x = theta, y = theta^{q^k}, z = theta^q
    const MatK& delta_fd(int k);

    SkewPoly bold_E(int k);
    // (1 - L_{k-1} tau) ... (1 - L_0 tau)
    SkewPoly factor_product(int k);
    // sum_{i<=n} Q_i tau^i and sum_{i<=n} P_i tau^i
    SkewPoly exp_trunc(int n);
    SkewPoly log_trunc(int n);

private:
    const Field* F_;
    int d_;
    ClassicalSeq seq_;
    std::deque<RatK> thq_;  // stable references
    std::map<int, MatK> Q_, P_, G_, Gi_, L_, dfd_;
    std::map<std::pair<int, int>, MatK> Ltw_, Gtw_;
};

// Theorem B for one k: one Check per tau-coefficient.
std::vector<Check> verify_theorem_B(CarlitzModel& m, int k);
// all identities of this module for k up to kmax
std::vector<Check> carlitz_suite(int q, int d, int kmax);

}  // namespace ffid
