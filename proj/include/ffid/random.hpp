#pragma once
// Seeded random elements of K and of matrices over K, for randomized identity checks.

#include <cstdint>
#include <random>

#include "ffid/matk.hpp"

namespace ffid {

class RandK {
public:
    RandK(const Field& F, std::uint64_t seed) : F_(F), g_(seed) {}

    elem el() { return (elem)(g_() % F_.q); }
    PolyA poly(int maxdeg) {
        std::vector<elem> c(maxdeg + 1);
        for (auto& x : c) x = el();
        return PolyA(F_, std::move(c));
    }
    // num / den with small degrees; den nonzero
    RatK rat(int maxdeg = 2) {
        PolyA n = poly(maxdeg), d;
        do d = poly(maxdeg / 2 + 1); while (d.is_zero());
        return RatK(n, d);
    }
    RatK nonzero(int maxdeg = 2) {
        RatK r;
        do r = rat(maxdeg); while (r.is_zero());
        return r;
    }
    MatK mat(int r, int c, int maxdeg = 2) {
        MatK m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = rat(maxdeg);
        return m;
    }
    // random element of the centralizer of N: an upper-triangular Toeplitz matrix
    MatK dmat(int d, int maxdeg = 2) {
        std::vector<RatK> c(d);
        for (auto& x : c) x = rat(maxdeg);
        return toeplitz_upper(Jet(std::move(c)));
    }
    std::mt19937_64& engine() { return g_; }

private:
    const Field& F_;
    std::mt19937_64 g_;
};

}  // namespace ffid
