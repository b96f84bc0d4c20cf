#pragma once
// Arrays, the formal algebra of K-linear combinations of arrays with the stuffle,
// diamond and triangle products, and the truncated sums L_i, L_{<i}, S_i, S_{<i}.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffid/ratk.hpp"

namespace ffid {

struct EnumerationBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Array = std::vector<int>;

int weight(const Array& a);
std::string array_str(const Array& a);
// q does not divide any entry
bool is_nd(const Array& a, int q);

class ArrayComb {
public:
    explicit ArrayComb(const Field& F) : F_(&F) {}
    // c * a, c = 1 by default; the empty array is the unit
    static ArrayComb of(const Field& F, const Array& a);
    static ArrayComb of(const Field& F, const Array& a, const RatK& c);
    static ArrayComb unit(const Field& F) { return of(F, {}); }

    const Field& field() const { return *F_; }
    const std::map<Array, RatK>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    RatK coeff(const Array& a) const;
    void add(const Array& a, const RatK& c);

    ArrayComb operator+(const ArrayComb& o) const;
    ArrayComb operator-(const ArrayComb& o) const;
    ArrayComb scaled(const RatK& c) const;
    bool operator==(const ArrayComb& o) const { return t_ == o.t_; }
    bool operator!=(const ArrayComb& o) const { return !(*this == o); }
    std::string str() const;

private:
    const Field* F_;
    std::map<Array, RatK> t_;
};

ArrayComb concat(const ArrayComb& a, const ArrayComb& b);
ArrayComb stuffle(const ArrayComb& a, const ArrayComb& b);
ArrayComb diamond(const ArrayComb& a, const ArrayComb& b);
// m |> n = m_1 (m_- * n); an empty left factor contributes nothing
ArrayComb triangle(const ArrayComb& a, const ArrayComb& b);
// a^{*k} by repeated stuffle multiplication
ArrayComb stuffle_pow(const ArrayComb& a, int k);
// a^{*q^j} through the Frobenius rule: sum c a  ->  sum c^{q^j} (q^j a)
ArrayComb stuffle_frobenius(const ArrayComb& a, int j);

// An unreduced fraction; comparisons cross-multiply, so no gcd is ever taken.
struct Frac {
    PolyA num, den;
    bool operator==(const Frac& o) const { return num * o.den == o.num * den; }
    RatK to_ratk() const { return RatK(num, den); }
};

// L_i and L_{<i}. Every value is formed over a power of l_{i-1} (or l_i) using only
// polynomial products, which keeps the large-weight cases cheap.
class LSums {
public:
    explicit LSums(const Field& F);
    const Field& field() const { return *F_; }
    Frac lt_frac(int i, const ArrayComb& x);
    Frac at_frac(int i, const ArrayComb& x);
    RatK lt(int i, const ArrayComb& x) { return lt_frac(i, x).to_ratk(); }
    RatK at(int i, const ArrayComb& x) { return at_frac(i, x).to_ratk(); }
    RatK lt(int i, const Array& a) { return lt(i, ArrayComb::of(*F_, a)); }
    RatK at(int i, const Array& a) { return at(i, ArrayComb::of(*F_, a)); }
    const PolyA& l(int i);
    // sum_{k > i_1 > ... > i_r >= 0} theta^{m_1 q^{i_1} + ... + m_r q^{i_r}} / (l_{i_1}^{n_1} ... l_{i_r}^{n_r})
    Frac polylog_lt(int k, const std::vector<int>& mrow, const std::vector<int>& nrow);

private:
    const Field* F_;
    std::vector<PolyA> l_, r_;
    const PolyA& r(int i);
    // numerators of L_{<i}(x) over l_{i-1}^w and of L_{i}(x) over l_i^w, x of weight w
    void run(int i, const std::map<Array, PolyA>& x, int w, PolyA& lt_num, PolyA& at_num);
};

// S_i and S_{<i} by enumerating monic polynomials; q^i above the budget throws
class PowerSums {
public:
    explicit PowerSums(const Field& F, std::uint64_t budget = (1u << 20));
    RatK at(int i, const Array& a);
    RatK lt(int i, const Array& a);
    RatK at(int i, const ArrayComb& x);
    RatK lt(int i, const ArrayComb& x);
    // S_i(n)
    RatK single(int i, int n);

private:
    const Field* F_;
    std::uint64_t budget_;
    std::map<std::pair<int, int>, RatK> cache_;
};

}  // namespace ffid
