#pragma once
// Elements of K = F_q(theta) in canonical form: gcd(num, den) = 1, den monic.

#include <stdexcept>
#include <string>

#include "ffid/poly.hpp"

namespace ffid {

struct PoleAtEvaluation : std::domain_error {
    using std::domain_error::domain_error;
};

class RatK {
public:
    RatK() = default;  // zero
    RatK(const PolyA& n);
    RatK(PolyA n, PolyA d);  // reduces; throws PoleAtEvaluation if d == 0

    static RatK zero(const Field& F) { return RatK(PolyA(F)); }
    static RatK one(const Field& F) { return RatK(PolyA::constant(F, 1)); }
    static RatK constant(const Field& F, elem a) { return RatK(PolyA::constant(F, a)); }
    static RatK integer(const Field& F, long long n) { return constant(F, F.from_int(n)); }
    static RatK theta(const Field& F) { return RatK(PolyA::theta(F)); }
    static RatK theta_pow(const Field& F, long n) { return RatK(PolyA::theta_pow(F, n)); }
    // theta^(q^k)
    static RatK theta_qk(const Field& F, int k);

    const PolyA& num() const { return n_; }
    const PolyA& den() const { return d_; }
    const Field* field() const { return n_.field() ? n_.field() : d_.field(); }

    bool is_zero() const { return n_.is_zero(); }
    bool is_one() const { return n_.is_one() && d_.is_one(); }
    bool is_poly() const { return d_.is_one() || d_.is_zero(); }

    RatK operator+(const RatK& o) const;
    RatK operator-(const RatK& o) const;
    RatK operator-() const;
    RatK operator*(const RatK& o) const;
    RatK operator/(const RatK& o) const;
    RatK& operator+=(const RatK& o) { return *this = *this + o; }
    RatK& operator-=(const RatK& o) { return *this = *this - o; }
    RatK& operator*=(const RatK& o) { return *this = *this * o; }
    RatK& operator/=(const RatK& o) { return *this = *this / o; }
    RatK inv() const;
    RatK pow(long n) const;
    RatK twist(int k) const;
    RatK scaled(elem a) const;

    bool operator==(const RatK& o) const { return n_ == o.n_ && (n_.is_zero() || d_ == o.d_); }
    bool operator!=(const RatK& o) const { return !(*this == o); }
    bool operator<(const RatK& o) const;

    // degree of num minus degree of den (valuation at infinity with sign flipped)
    long degree() const;

    std::string str() const;  // "num/den", or "num" when den = 1

private:
    PolyA n_, d_;
    struct NoReduce {};
    RatK(PolyA n, PolyA d, NoReduce) : n_(std::move(n)), d_(std::move(d)) {}
    void normalize();
};

}  // namespace ffid
