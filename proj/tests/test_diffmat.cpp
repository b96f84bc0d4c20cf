#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffid/checks.hpp"
#include "ffid/diffmat.hpp"

using namespace ffid;

namespace {
MRat var(const Field& F, int v) { return MRat(MPoly::var(F, v)); }
MRat cst(const Field& F, long long n) { return MRat(MPoly::constant(F, n)); }
}  // namespace

TEST_CASE("hyperderivatives of monomials and of 1/x") {
    const Field& F = Field::get(5);
    MPoly x = MPoly::var(F, X);
    CHECK(x.pow(2).hyperderive(X, 2) == MPoly::constant(F, 1));
    const Field& F3 = Field::get(3);
    CHECK(MPoly::var(F3, X).pow(3).hyperderive(X, 1).is_zero());
    // D_1(1/x) = -1/x^2 from 0 = D_1(x) (1/x) + x D_1(1/x)
    MRat inv(MPoly::constant(F, 1), x);
    CHECK(hyperderive(inv, X, 1) == MRat(MPoly::constant(F, -1), x * x));
    // D_j(1/x) = (-1)^j / x^{j+1}
    for (int j = 0; j < 5; ++j) CHECK(hyperderive(inv, X, j) == MRat(MPoly::constant(F, j % 2 ? -1 : 1), x.pow(j + 1)));
}

TEST_CASE("d-matrix examples") {
    const Field& F = Field::get(3);
    // d_theta(theta) = theta + N
    Jet j = Jet::linear_power(RatK::theta(F), RatK::zero(F), 1, 3);
    CHECK(toeplitz_upper(j) == mat_scalar(RatK::theta(F), 3) + nilpotent_N(F, 3));
    // d_t(1) = 1
    CHECK(d_matrix(cst(F, 1), T, 3) == identity_r(F, 3));
    // d = 2, d_t((t - c)^2) at t = c is zero
    RatK c = RatK::theta(F) + RatK::one(F);
    CHECK(toeplitz_upper(Jet::linear_power(c, c, 2, 2)).is_zero());
}

TEST_CASE("partial-matrix examples") {
    const Field& F = Field::get(2);
    MRat x = var(F, X), y = var(F, Y);
    auto P = partial_matrix({x - y, cst(F, 1)}, X, 2);
    MatR want(2, 2);
    want(0, 0) = cst(F, 1);
    want(1, 0) = x - y;
    want(1, 1) = cst(F, 1);
    CHECK(P == want);
    auto P1 = partial_matrix({x, y}, X, 1);
    CHECK(P1(0, 0) == x);
    CHECK(P1(0, 1) == y);
    // left linearity through d_x
    MRat g(MPoly::var(F, X).pow(3) + MPoly::constant(F, 1), MPoly::var(F, X) + MPoly::var(F, Y));
    std::vector<MRat> fs{x * y, x * x + y, cst(F, 1)};
    std::vector<MRat> gfs;
    for (auto& f : fs) gfs.push_back(g * f);
    CHECK(partial_matrix(gfs, X, 3) == d_matrix(g, X, 3) * partial_matrix(fs, X, 3));
}

TEST_CASE("anti-transpose examples") {
    const Field& F = Field::get(7);
    MatK m(2, 2);
    m(0, 0) = RatK::integer(F, 1);
    m(0, 1) = RatK::integer(F, 2);
    m(1, 0) = RatK::integer(F, 3);
    m(1, 1) = RatK::integer(F, 4);
    MatK w(2, 2);
    w(0, 0) = RatK::integer(F, 4);
    w(0, 1) = RatK::integer(F, 2);
    w(1, 0) = RatK::integer(F, 3);
    w(1, 1) = RatK::integer(F, 1);
    CHECK(m.anti_transpose() == w);
    CHECK(m.anti_transpose().anti_transpose() == m);
    CHECK(mat_identity(F, 3).anti_transpose() == mat_identity(F, 3));
    MatK a(2, 3), b(3, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            a(i, j) = RatK::integer(F, i + 2 * j + 1);
            b(j, i) = RatK::theta(F).pow(i + j);
        }
    CHECK((a * b).anti_transpose() == b.anti_transpose() * a.anti_transpose());
}

TEST_CASE("Delta-matrix examples") {
    const Field& F = Field::get(3);
    // Delta(1) = e_{d,1}
    auto D1 = delta_matrix(cst(F, 1), X, Z, 3);
    CHECK(D1 == lift(unit_e(F, 3, 3, 1)));
    MRat f = MRat(MPoly::var(F, X) * MPoly::var(F, Z) + MPoly::var(F, Y));
    CHECK(delta_matrix(f, X, Z, 1)(0, 0) == f);
    auto D2 = delta_matrix(MRat(fd_poly(F, 2)), X, Z, 2);
    CHECK(D2(0, 0) == cst(F, 1));
    CHECK(D2(0, 1).is_zero());
    CHECK(D2(1, 0) == MRat(fd_poly(F, 2)));
    CHECK(D2(1, 1) == cst(F, 1));
}

TEST_CASE("H and M examples") {
    const Field& F = Field::get(5);
    RatK a = RatK::theta(F), b = RatK::theta(F).pow(3) + RatK::one(F);
    MatK H = h_matrix(a, b, 2);
    CHECK(H(0, 0).is_one());
    CHECK(H(0, 1).is_zero());
    CHECK(H(1, 0) == a - b);
    CHECK(H(1, 1).is_one());
    CHECK(h_matrix(a, a, 3) == mat_identity(F, 3));
    CHECK(m_matrix(a, b, 1) == mat_identity(F, 1));
    MatK M = m_matrix(a, b, 2);
    CHECK(M(1, 0) == (a - b).scaled(2));
    CHECK(M(0, 1).is_zero());
}

TEST_CASE("f_d small cases") {
    const Field& F = Field::get(2);
    CHECK(fd_poly(F, 0).is_zero());
    CHECK(fd_poly(F, 1) == MPoly::constant(F, 1));
    // specialize f_2 at (theta, theta^q, theta^q) and at zero
    std::map<int, RatK> at{{X, RatK::theta(F)}, {Y, RatK::theta_qk(F, 1)}, {Z, RatK::theta_qk(F, 1)}};
    CHECK(fd_poly(F, 2).specialize(at) == RatK::theta(F) - RatK::theta_qk(F, 1));
    std::map<int, RatK> zero{{X, RatK::zero(F)}, {Y, RatK::zero(F)}, {Z, RatK::zero(F)}};
    CHECK(fd_poly(F, 2).specialize(zero).is_zero());
    MPoly xy = MPoly::var(F, X) - MPoly::var(F, Y);
    CHECK(xy.specialize({{X, RatK::theta(F)}, {Y, RatK::theta_qk(F, 1)}}) == RatK::theta(F) - RatK::theta_qk(F, 1));
    CHECK_THROWS(xy.specialize({{X, RatK::theta(F)}}));
    MRat pole(MPoly::constant(F, 1), xy);
    CHECK_THROWS_AS(pole.specialize({{X, RatK::theta(F)}, {Y, RatK::theta(F)}}), PoleAtEvaluation);
}

TEST_CASE("lemma suite on small sizes") {
    for (int q : {2, 3}) {
        for (int d = 1; d <= 3; ++d) {
            auto res = delta_lemma_suite(q, d, 6, 11 + d);
            for (auto& c : res) {
                INFO("q=" << q << " d=" << d << " " << c.name << " " << c.witness);
                CHECK(c.ok);
            }
        }
    }
}
