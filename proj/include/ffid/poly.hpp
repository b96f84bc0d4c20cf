#pragma once
// Dense univariate polynomials over F_q in the variable theta (the ring A).

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ffid/field.hpp"

namespace ffid {

// degree of the zero polynomial
inline constexpr long kDegNegInf = std::numeric_limits<long>::min();

class PolyA {
public:
    PolyA() = default;
    PolyA(const Field& F) : F_(&F) {}
    PolyA(const Field& F, std::vector<elem> coeffs) : F_(&F), c_(std::move(coeffs)) { trim(); }

    static PolyA constant(const Field& F, elem a);
    static PolyA theta(const Field& F);                   // the variable itself
    static PolyA monomial(const Field& F, elem a, long n);  // a * theta^n
    static PolyA theta_pow(const Field& F, long n) { return monomial(F, 1, n); }

    const Field* field() const { return F_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    long deg() const { return c_.empty() ? kDegNegInf : (long)c_.size() - 1; }
    elem lead() const { return c_.empty() ? 0 : c_.back(); }
    elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<elem>& coeffs() const { return c_; }

    PolyA operator+(const PolyA& o) const;
    PolyA operator-(const PolyA& o) const;
    PolyA operator-() const;
    PolyA operator*(const PolyA& o) const;
    PolyA& operator+=(const PolyA& o);
    PolyA& operator-=(const PolyA& o);
    PolyA scaled(elem a) const;
    PolyA shifted(long n) const;  // times theta^n, n >= 0

    bool operator==(const PolyA& o) const { return c_ == o.c_; }
    bool operator!=(const PolyA& o) const { return c_ != o.c_; }
    bool operator<(const PolyA& o) const;  // deterministic total order

    // quotient and remainder; throws on division by zero
    static void divmod(const PolyA& a, const PolyA& b, PolyA& quo, PolyA& rem);
    PolyA operator/(const PolyA& b) const;  // exact division, throws if remainder nonzero
    PolyA operator%(const PolyA& b) const;

    PolyA monic() const;
    static PolyA gcd(PolyA a, PolyA b);  // monic gcd, gcd(0,0) = 0

    PolyA pow(unsigned long n) const;
    // theta -> theta^(q^k)
    PolyA twist(int k) const;
    // theta -> theta^m
    PolyA inflate(long m) const;
    elem eval(elem x) const;

    std::string str() const;

private:
    const Field* F_ = nullptr;
    std::vector<elem> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field& fld(const PolyA& o) const;
    friend class RatK;
};

}  // namespace ffid
