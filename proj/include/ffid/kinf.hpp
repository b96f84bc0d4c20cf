#pragma once
// Truncated Laurent series in 1/theta over F_q with tracked absolute precision, and
// numeric work in K_infinity: powers of pi-tilde, the Anderson-Thakur ratios,
// polylogarithm and zeta values, delta_1 of the Omega function, stabilization of
// the normalized operators, the d = 1 sine composition, and Carlitz's theorem
// through rational reconstruction.

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffid/carlitz.hpp"
#include "ffid/checks.hpp"
#include "ffid/mzv.hpp"

namespace ffid {

struct RamifiedExponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivergentSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ReconstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x = sum c_e theta^e. Every exponent >= lo() is known exactly; below lo() nothing is
// claimed. Exact values have lo() == kExact and finite support.
class LaurentVal {
public:
    static constexpr long kExact = std::numeric_limits<long>::min();
    // exponents are clamped here; a bound that low carries no information anyway
    static constexpr long kFloor = -(1L << 60);

    LaurentVal() = default;
    explicit LaurentVal(const Field& F) : F_(&F), p_(F) {}
    static LaurentVal exact(const PolyA& p, long shift = 0);
    static LaurentVal monomial(const Field& F, elem c, long e);
    static LaurentVal one(const Field& F) { return monomial(F, 1, 0); }
    // zero, known only for exponents >= lo
    static LaurentVal unknown(const Field& F, long lo);
    // num/den expanded down to exponent lo
    static LaurentVal from_ratk(const RatK& r, long lo);

    const Field& field() const { return *F_; }
    bool is_exact() const { return lo_ == kExact; }
    long lo() const { return lo_; }
    // highest exponent with a known nonzero coefficient; kDegNegInf if none
    long top() const;
    // the true value has degree at most bound()
    long bound() const;
    bool known_zero() const { return p_.is_zero(); }
    elem coeff(long e) const;

    LaurentVal operator+(const LaurentVal& o) const;
    LaurentVal operator-(const LaurentVal& o) const;
    LaurentVal operator-() const;
    LaurentVal operator*(const LaurentVal& o) const;
    LaurentVal& operator+=(const LaurentVal& o) { return *this = *this + o; }
    LaurentVal& operator-=(const LaurentVal& o) { return *this = *this - o; }
    LaurentVal& operator*=(const LaurentVal& o) { return *this = *this * o; }
    LaurentVal scaled(elem c) const;
    // lo_target is required for exact non-monomials and optional otherwise
    LaurentVal inv(long lo_target = kExact) const;
    LaurentVal pow(long n, long lo_target = kExact) const;
    // x^{q^k}: theta -> theta^{q^k}, coefficients fixed
    LaurentVal frob(int k) const;
    // forget every exponent below e
    LaurentVal truncated(long e) const;

    std::string str(int terms = 6) const;

private:
    const Field* F_ = nullptr;
    long base_ = 0;  // exponent of p_[0]
    PolyA p_;
    long lo_ = kExact;
    void normalize();
    PolyA slice_from(long e) const;  // coefficients with exponent >= e, re-based at e
};

// lowest exponent from which a and b agree on every known exponent
long agree_from(const LaurentVal& a, const LaurentVal& b);
// number of agreeing theta^{-1}-digits counted from the leading exponent of a
long agree_digits(const LaurentVal& a, const LaurentVal& b);

// saturating exponent helpers
long sat_add(long a, long b);
long sat_mul(long a, long b);
long ipow_sat(long b, long e);
// deg l_i = q + q^2 + ... + q^i, saturating
long deg_l(int q, int i);

// Polynomial in t with Laurent coefficients c_0..c_T. Beyond T the coefficients are
// unknown but bounded: v(c_n) <= tail_b - tail_s (n - T).
struct TruncSeriesT {
    std::vector<LaurentVal> c;
    long tail_b = LaurentVal::kFloor, tail_s = 0;
    bool has_tail = false;
    int degree_bound() const { return (int)c.size() - 1; }
    // i-th Hasse derivative at an exact point a, tail included in the precision
    LaurentVal jet(const LaurentVal& a, int i) const;
    LaurentVal eval(const LaurentVal& a) const { return jet(a, 0); }
    TruncSeriesT frob(int k) const;
};
TruncSeriesT series_mul(const TruncSeriesT& a, const TruncSeriesT& b);
// product by a polynomial in t whose coefficients are given
TruncSeriesT series_mul_poly(const TruncSeriesT& a, const std::vector<LaurentVal>& poly);
TruncSeriesT series_scale(const TruncSeriesT& a, const LaurentVal& s);

// prod_{i>=1} (1 - theta^{1-q^i}) down to exponent lo
LaurentVal pi_product(const Field& F, long lo);
// pi-tilde^m for (q-1) | m, to n_digits below its leading term
LaurentVal pi_power(const Field& F, long m, long n_digits);

// (pi Omega)^d = (pi / omega^{(1)})^d when twisted, else (pi / omega)^d,
// coefficients down to exponent -n_digits, t-degree t_deg
TruncSeriesT omega_ratio(const Field& F, int d, int t_deg, long n_digits, bool twisted = true);

// L(m_1..m_r; n_1..n_r) to n_digits below the leading exponent bound; DivergentSpec
// unless m_j (q-1) < n_j q and n_j >= 1
LaurentVal series_value(const Field& F, const std::vector<int>& mrow, const std::vector<int>& nrow, long n_digits);
// S_i(n) exactly, through Hasse derivatives of 1/e_i at theta^i
RatK power_sum_exact(ClassicalSeq& s, int i, int n);
// an upper bound for the valuation of S_i(n), nonincreasing in i
long power_sum_bound(int q, int i, int n);
// zeta_A(n_1..n_r) to n_digits
LaurentVal zeta_value(const Field& F, const Array& n, long n_digits);

struct ThmENumeric {
    LaurentVal lhs, rhs;          // rhs = L(0; d q^k)
    long digits = 0;              // agreement of lhs with (-1)^d rhs
    long digits_unsigned = 0;     // agreement of lhs with rhs itself
    int steps = 0;     // tau_M-division steps used
    int factors = 0;   // factors of the Omega product kept
};
// delta_1 (z = e_d) of tau_M^k ((t-theta)^{d-1} (pi Omega)^d) by the division algorithm,
// against (-1)^d L(0; d q^k); PrecisionExhausted when fewer than 10 digits can be certified
ThmENumeric theorem_E_numeric(const Field& F, int d, int k, int t_deg, long n_digits);

// theta-degrees of M_k - M_{k-1}, M_k = Gamma_k^{-1} Q_j Gamma_{k-j}^{(j)}, for k = kfirst..klast;
// kDegNegInf for an exact zero
std::vector<long> limit_sine_degrees(CarlitzModel& cm, int j, int kfirst, int klast);
// the K_infinity valuations -deg must strictly increase, or the sequence be exactly constant
Check limit_sine_stabilization(CarlitzModel& cm, int j, int kfirst, int klast);

// d = 1: (1 - L_{k-1} tau) ... (1 - L_0 tau)(z), and sum_{i<=k} pi^{q^i-1}/D_i z^{q^i}, both down to lo
LaurentVal sine_composition(const Field& F, const LaurentVal& z, int k, long lo);
LaurentVal sine_series(const Field& F, const LaurentVal& z, int k, long lo);

struct Reconstruction {
    RatK value;
    long digits_used = 0;
};
// continued fractions in F_q((1/theta)); ReconstructionFailure if no convergent fits with margin to spare
Reconstruction rational_reconstruct(const LaurentVal& x, long margin = 8);

struct CarlitzRatio {
    RatK ratio;           // zeta_A(k(q-1)) / pi^{k(q-1)}
    long digits = 0;      // digits of agreement after re-verification at doubled precision
    bool stable = false;  // the doubled run reconstructs the same element
};
CarlitzRatio carlitz_ratio_reconstruct(const Field& F, int k, long n_digits);

}  // namespace ffid
