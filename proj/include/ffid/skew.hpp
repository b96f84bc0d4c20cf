#pragma once
// Skew polynomials sum M_i tau^i with d x d matrix coefficients over K,
// multiplied with the rule tau M = M^(1) tau.

#include <vector>

#include "ffid/matk.hpp"

namespace ffid {

class SkewPoly {
public:
    SkewPoly(const Field& F, int d) : F_(&F), d_(d) {}
    SkewPoly(const Field& F, int d, std::vector<MatK> coeffs);
    static SkewPoly one(const Field& F, int d);
    // the monomial M tau^i
    static SkewPoly monomial(const MatK& m, int i);

    int dim() const { return d_; }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    const std::vector<MatK>& coeffs() const { return c_; }
    // coefficient of tau^i (zero matrix beyond the degree)
    MatK coeff(int i) const;

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator*(const SkewPoly& o) const;
    // product discarding powers of tau above n
    SkewPoly mul_trunc(const SkewPoly& o, int n) const;
    SkewPoly truncated(int n) const;
    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }
    // index of the first differing coefficient, or -1
    int first_difference(const SkewPoly& o) const;

private:
    const Field* F_;
    int d_;
    std::vector<MatK> c_;
    void trim();
};

}  // namespace ffid
