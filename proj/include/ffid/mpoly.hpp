#pragma once
// Multivariate polynomials over K in a fixed family of commuting indeterminates,
// and unreduced quotients of them.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffid/ratk.hpp"

namespace ffid {

enum Var : int { X = 0, Y = 1, Z = 2, ZP = 3, T = 4, Y1 = 5, Y2 = 6, Y3 = 7 };
inline constexpr int kNumVars = 8;
const char* var_name(int v);

// exponent vector packed 8 bits per variable
using Mono = std::uint64_t;
inline int mono_exp(Mono m, int v) { return (int)((m >> (8 * v)) & 0xff); }

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(const RatK& c);
    static MPoly var(const Field& F, int v);
    static MPoly constant(const Field& F, long long n);

    bool is_zero() const { return t_.empty(); }
    const std::map<Mono, RatK>& terms() const { return t_; }
    const Field* field() const { return F_; }
    int degree_in(int v) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const RatK& c) const;
    MPoly pow(int n) const;
    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // j-th divided derivative in v: D_j(v^i) = C(i, j) v^(i-j)
    MPoly hyperderive(int v, int j) const;
    // replace v by a polynomial
    MPoly substitute(int v, const MPoly& by) const;
    // evaluate every variable that occurs; missing assignments throw std::invalid_argument
    RatK specialize(const std::map<int, RatK>& at) const;
    // evaluate only the listed variables
    MPoly partial_specialize(const std::map<int, RatK>& at) const;
    MPoly twist(int k) const;

    std::string str() const;

private:
    const Field* F_ = nullptr;
    std::map<Mono, RatK> t_;
    void add_term(Mono m, const RatK& c);
};

// a / b with b != 0, never reduced; equality by cross multiplication
class MRat {
public:
    MRat() = default;
    MRat(const MPoly& n);
    MRat(MPoly n, MPoly d);

    const MPoly& num() const { return n_; }
    const MPoly& den() const { return d_; }
    bool is_zero() const { return n_.is_zero(); }

    MRat operator+(const MRat& o) const;
    MRat operator-(const MRat& o) const;
    MRat operator-() const;
    MRat operator*(const MRat& o) const;
    bool operator==(const MRat& o) const;
    bool operator!=(const MRat& o) const { return !(*this == o); }

    // throws PoleAtEvaluation when the denominator vanishes
    RatK specialize(const std::map<int, RatK>& at) const;

private:
    MPoly n_, d_;
};

// Table of mixed divided derivatives D_{u,i} D_{v,j} f for i, j < n,
// solved through the Leibniz relation with denominator powers den^(i+j+1).
class DerivTable {
public:
    DerivTable(const MRat& f, int u, int v, int n);
    const MRat& at(int i, int j) const { return tab_[i * n_ + j]; }
    int size() const { return n_; }

private:
    int n_;
    std::vector<MRat> tab_;
};

}  // namespace ffid
