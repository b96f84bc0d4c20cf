#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffid/ratk.hpp"

using namespace ffid;

namespace {

PolyA rand_poly(const Field& F, std::mt19937_64& g, int maxdeg) {
    int n = (int)(g() % (maxdeg + 1)) + 1;
    std::vector<elem> c(n);
    for (auto& x : c) x = (elem)(g() % F.q);
    return PolyA(F, c);
}

RatK rand_rat(const Field& F, std::mt19937_64& g, int maxdeg) {
    PolyA d;
    do d = rand_poly(F, g, maxdeg);
    while (d.is_zero());
    return RatK(rand_poly(F, g, maxdeg), d);
}

// naive product straight from the field tables
std::vector<elem> naive_mul(const Field& F, const PolyA& a, const PolyA& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<elem> r(a.deg() + b.deg() + 1, 0);
    for (long i = 0; i <= a.deg(); ++i)
        for (long j = 0; j <= b.deg(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

}  // namespace

TEST_CASE("field tables satisfy the field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 25, 27, 49, 125}) {
        const Field& F = Field::get(q);
        CHECK(F.q == q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add((elem)a, F.neg((elem)a)) == 0);
            CHECK(F.pow((elem)a, q) == a);  // x^q = x
            if (a) CHECK(F.mul((elem)a, F.inv((elem)a)) == 1);
            for (int b = 0; b < q; b += 1 + q / 9)
                for (int c = 0; c < q; c += 1 + q / 7) {
                    CHECK(F.mul((elem)a, F.add((elem)b, (elem)c)) ==
                          F.add(F.mul((elem)a, (elem)b), F.mul((elem)a, (elem)c)));
                    CHECK(F.mul(F.mul((elem)a, (elem)b), (elem)c) == F.mul((elem)a, F.mul((elem)b, (elem)c)));
                }
        }
    }
}

TEST_CASE("p-power Frobenius iterated e times is the identity, and once is not") {
    for (int q : {4, 8, 9, 27, 25}) {
        const Field& F = Field::get(q);
        bool moved = false;
        for (int a = 0; a < q; ++a) {
            elem x = (elem)a;
            for (int i = 0; i < F.e; ++i) x = F.pow(x, F.p);
            CHECK(x == a);
            if (F.pow((elem)a, F.p) != a) moved = true;
        }
        CHECK(moved);
    }
}

TEST_CASE("unsupported fields are rejected") {
    CHECK_THROWS_AS(Field::get(6), FieldError);
    CHECK_THROWS_AS(Field::get(16), FieldError);
    CHECK_THROWS_AS(Field::get(512), FieldError);
}

TEST_CASE("binomials mod p follow Lucas") {
    CHECK(binom_mod(2, 2, 5) == 1);
    CHECK(binom_mod(3, 1, 3) == 0);
    CHECK(binom_mod(10, 3, 7) == 120 % 7);
    CHECK(gbinom_mod(-1, 3, 5) == 4);   // (-1)^3
    CHECK(gbinom_mod(-2, 2, 7) == 3);   // C(-2,2) = 3
}

TEST_CASE("polynomial product agrees with the schoolbook oracle") {
    std::mt19937_64 g(1);
    for (int q : {2, 3, 4, 5, 9}) {
        const Field& F = Field::get(q);
        for (int it = 0; it < 30; ++it) {
            int md = it < 20 ? 20 : 700;
            PolyA a = rand_poly(F, g, md), b = rand_poly(F, g, md / (1 + it % 3));
            CHECK((a * b).coeffs() == naive_mul(F, a, b));
        }
    }
}

TEST_CASE("division with remainder and gcd") {
    std::mt19937_64 g(2);
    for (int q : {2, 3, 4, 7, 8}) {
        const Field& F = Field::get(q);
        for (int it = 0; it < 30; ++it) {
            PolyA a = rand_poly(F, g, 60), b = rand_poly(F, g, 30);
            if (b.is_zero()) continue;
            PolyA qq, r;
            PolyA::divmod(a, b, qq, r);
            CHECK(qq * b + r == a);
            CHECK((r.is_zero() || r.deg() < b.deg()));
            PolyA f = rand_poly(F, g, 10);
            if (f.is_zero()) continue;
            PolyA gg = PolyA::gcd(f * a, f * b);
            CHECK(gg.lead() == 1);
            CHECK((gg % f.monic()).is_zero());
            CHECK(((f * a) % gg).is_zero());
        }
    }
    const Field& F2 = Field::get(2);
    CHECK(PolyA(F2).deg() == kDegNegInf);
}

TEST_CASE("twist of elements of K") {
    const Field& F = Field::get(2);
    RatK th = RatK::theta(F);
    CHECK(th.twist(1) == RatK::theta_pow(F, 2));
    CHECK(RatK::one(F).twist(1) == RatK::one(F));
    RatK x = RatK::one(F) / (th + RatK::one(F));
    CHECK(x.twist(1) == RatK::one(F) / (RatK::theta_pow(F, 2) + RatK::one(F)));
    CHECK(x.twist(1) == x * x);  // q = 2: twisting is squaring
    const Field& F4 = Field::get(4);
    CHECK(RatK::constant(F4, 2).twist(3) == RatK::constant(F4, 2));
}

TEST_CASE("twist is a ring homomorphism and composes additively") {
    std::mt19937_64 g(3);
    for (int q : {2, 3, 4, 5}) {
        const Field& F = Field::get(q);
        for (int it = 0; it < 20; ++it) {
            RatK f = rand_rat(F, g, 5), h = rand_rat(F, g, 5);
            CHECK((f * h).twist(1) == f.twist(1) * h.twist(1));
            CHECK((f + h).twist(2) == f.twist(2) + h.twist(2));
            CHECK(f.twist(3) == f.twist(1).twist(2));
            // twist equals q^k-th powering
            CHECK(f.twist(1) == f.pow(q));
        }
    }
}

TEST_CASE("canonical form is independent of the arithmetic route") {
    std::mt19937_64 g(4);
    for (int q : {2, 3, 4}) {
        const Field& F = Field::get(q);
        for (int it = 0; it < 40; ++it) {
            RatK a = rand_rat(F, g, 6), b = rand_rat(F, g, 6), c = rand_rat(F, g, 4);
            RatK s1 = (a + b) * c;
            RatK s2 = RatK(a.num() * b.den() * c.num() + b.num() * a.den() * c.num(), a.den() * b.den() * c.den());
            CHECK(s1 == s2);
            CHECK(s1.num() == s2.num());
            CHECK(s1.den() == s2.den());
            CHECK(s1.den().lead() == 1);
            CHECK(PolyA::gcd(s1.num(), s1.den()).is_constant());
            if (!b.is_zero()) CHECK(a / b * b == a);
            CHECK(a - a == RatK::zero(F));
        }
    }
    CHECK_THROWS_AS(RatK(PolyA::theta(Field::get(3)), PolyA(Field::get(3))), PoleAtEvaluation);
}

TEST_CASE("rendering") {
    const Field& F = Field::get(3);
    RatK x = RatK(PolyA(F, {1, 0, 2}), PolyA(F, {0, 1}));
    CHECK(x.str() == "(2*θ^2+1)/θ");
    CHECK(RatK::zero(F).str() == "0");
}
