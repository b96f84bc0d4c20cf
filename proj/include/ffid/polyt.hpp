#pragma once
// Polynomials in t with coefficients in K; the Frobenius twist acts on coefficients only.

#include <string>
#include <vector>

#include "ffid/matk.hpp"

namespace ffid {

class PolyT {
public:
    PolyT() = default;
    explicit PolyT(const Field& F) : F_(&F) {}
    PolyT(const Field& F, std::vector<RatK> c);
    static PolyT constant(const RatK& c);
    static PolyT t(const Field& F);
    // (t - c)^e, e >= 0
    static PolyT linear_power(const Field& F, const RatK& c, int e);
    // b_k = (t - theta)(t - theta^q)...(t - theta^{q^{k-1}}), b_0 = 1
    static PolyT b(const Field& F, int k);

    const Field& field() const { return *F_; }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatK>& coeffs() const { return c_; }
    RatK coeff(int i) const;

    PolyT operator+(const PolyT& o) const;
    PolyT operator-(const PolyT& o) const;
    PolyT operator-() const;
    PolyT operator*(const PolyT& o) const;
    PolyT scaled(const RatK& s) const;
    PolyT& operator+=(const PolyT& o) { return *this = *this + o; }
    PolyT pow(int e) const;
    PolyT twist(int k) const;
    bool operator==(const PolyT& o) const { return c_ == o.c_; }
    bool operator!=(const PolyT& o) const { return !(*this == o); }

    RatK eval(const RatK& a) const;
    // Taylor coefficients D_{t,i}(p)(a), i < n
    Jet jet_at(const RatK& a, int n) const;
    // exact quotient by (t - c)^e; throws std::domain_error when not divisible
    PolyT div_linear_power(const RatK& c, int e) const;
    // sum_{i<n} jet[i] (t - a)^i
    static PolyT from_jet(const Field& F, const Jet& j, const RatK& a);

    std::string str() const;

private:
    const Field* F_ = nullptr;
    std::vector<RatK> c_;
    void trim();
};

using VecT = std::vector<PolyT>;
// M * v for a d x d matrix over K and a column of polynomials
VecT mat_apply(const MatK& m, const VecT& v);
VecT vec_add(const VecT& a, const VecT& b);
VecT vec_twist(const VecT& v, int k);

}  // namespace ffid
