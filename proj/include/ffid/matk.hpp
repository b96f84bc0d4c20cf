#pragma once
// Matrices over K and truncated Taylor jets at points of K.

#include <vector>

#include "ffid/mat.hpp"
#include "ffid/ratk.hpp"

namespace ffid {

using MatK = Mat<RatK>;

MatK mat_identity(const Field& F, int d);
MatK mat_zero(const Field& F, int r, int c);
MatK mat_scalar(const RatK& s, int d);
// the nilpotent shift N = e_{1,2} + ... + e_{d-1,d}
MatK nilpotent_N(const Field& F, int d);
// elementary matrix with a single 1 at (i, j), 1-based like the text
MatK unit_e(const Field& F, int d, int i, int j);

MatK twist(const MatK& m, int k);
// Gauss-Jordan; throws std::domain_error when singular
MatK inverse(const MatK& m);
bool is_upper_toeplitz(const MatK& m);
bool is_lower_unitriangular(const MatK& m);

// Truncated power series sum c_i X^i, i < n, with X = (x - a) for an implicit point a.
class Jet {
public:
    Jet() = default;
    explicit Jet(std::vector<RatK> c) : c_(std::move(c)) {}
    static Jet constant(const RatK& v, int n);
    // (x - c)^e expanded at x = a; e may be negative (PoleAtEvaluation if a == c)
    static Jet linear_power(const RatK& a, const RatK& c, long e, int n);

    int size() const { return (int)c_.size(); }
    const RatK& operator[](int i) const { return c_[i]; }
    RatK& operator[](int i) { return c_[i]; }
    const std::vector<RatK>& coeffs() const { return c_; }

    Jet operator*(const Jet& o) const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet scaled(const RatK& s) const;
    Jet reciprocal() const;
    Jet pow(long e) const;
    Jet twist(int k) const;
    bool operator==(const Jet& o) const { return c_ == o.c_; }

private:
    std::vector<RatK> c_;
};

// upper-triangular Toeplitz matrix sum_i c_i N^i, i.e. the d-matrix of a jet
MatK toeplitz_upper(const Jet& j);
// first row of an upper-triangular Toeplitz matrix, as a jet
Jet toeplitz_row(const MatK& m);
// inverse of an upper-triangular Toeplitz matrix through the series reciprocal
MatK dmat_inverse(const MatK& m);

}  // namespace ffid
