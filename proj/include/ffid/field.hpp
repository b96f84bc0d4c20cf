#pragma once
// Finite fields F_q, q = p^e with e <= 3 and q <= 256.
// Elements are encoded as integers 0..q-1 whose base-p digits are the
// coordinates on the basis 1, w, w^2 of F_p[w]/(modulus).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffid {

using elem = std::uint8_t;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Field {
public:
    enum class Kind { Binary, Char2Ext, SmallPrime, Generic };

    int p = 0, e = 0, q = 0;
    Kind kind = Kind::Generic;
    std::vector<int> modulus;  // monic, low degree first, size e+1 (empty when e == 1)

    elem add(elem a, elem b) const { return add_[a * q + b]; }
    elem sub(elem a, elem b) const { return add_[a * q + neg_[b]]; }
    elem mul(elem a, elem b) const { return mul_[a * q + b]; }
    elem neg(elem a) const { return neg_[a]; }
    elem inv(elem a) const {
        if (a == 0) throw FieldError("inverse of zero in F_q");
        return inv_[a];
    }
    elem pow(elem a, long long n) const;
    elem from_int(long long n) const;  // image of an integer in the prime field

    // r[i] += c * b[i] for i < n; the hot loop of all polynomial arithmetic
    void axpy(elem* r, const elem* b, std::size_t n, elem c) const;
    // r[i] = c * b[i]
    void scale(elem* r, const elem* b, std::size_t n, elem c) const;

    std::string elem_str(elem a) const;

    // shared instance per q; throws FieldError for unsupported q
    static const Field& get(int q);

private:
    explicit Field(int q);
    std::vector<elem> add_, mul_, neg_, inv_;
    std::uint32_t barrett_ = 0;
};

// binomial coefficient C(n, k) reduced mod p (Lucas); n, k >= 0
int binom_mod(long long n, long long k, int p);
// generalized binomial C(n, k) mod p for any integer n and k >= 0
int gbinom_mod(long long n, long long k, int p);

}  // namespace ffid
