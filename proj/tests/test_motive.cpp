#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ffid/motive.hpp"
#include "ffid/random.hpp"

using namespace ffid;

namespace {
void expect_all_ok(const std::vector<Check>& cs) {
    for (auto& c : cs) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.ok);
        CHECK(c.instances > 0);
    }
}
MatK e_col(const Field& F, int d, int i) {
    MatK e(d, 1, RatK::zero(F));
    e(i, 0) = RatK::one(F);
    return e;
}
}  // namespace

TEST_CASE("polynomials in t") {
    const Field& F = Field::get(3);
    RatK th = RatK::theta(F);
    PolyT p = PolyT::linear_power(F, th, 3) + PolyT::t(F);
    Jet j = p.jet_at(th, 4);
    CHECK(j[0] == th);
    CHECK(j[1].is_one());
    CHECK(j[2].is_zero());
    CHECK(j[3].is_one());
    CHECK(PolyT::from_jet(F, j, th) == p);
    CHECK(PolyT::linear_power(F, th, 3).div_linear_power(th, 2) == PolyT::linear_power(F, th, 1));
    CHECK_THROWS_AS(p.div_linear_power(th, 1), std::domain_error);
    CHECK(PolyT::b(F, 2).eval(RatK::theta_qk(F, 1)).is_zero());
    CHECK(PolyT::b(F, 0) == PolyT::constant(RatK::one(F)));
}

TEST_CASE("delta_0 on the standard bases") {
    for (int d = 1; d <= 3; ++d) {
        const Field& F = Field::get(2);
        for (int i = 0; i < d; ++i) {
            PolyT m = PolyT::linear_power(F, RatK::theta(F), i);
            CHECK(delta0_M(m, d) == e_col(F, d, i));
            CHECK(delta0_N(m, d) == e_col(F, d, d - 1 - i));
        }
    }
}

TEST_CASE("twisted pairing terms") {
    const Field& F = Field::get(3);
    PolyT one = PolyT::constant(RatK::one(F));
    MatK c = twisted_pair_term_M(one, 1, 1);
    CHECK(c(0, 0) == (RatK::theta_qk(F, 1) - RatK::theta(F)).inv());
    CHECK(twisted_pair_term_M(one, 0, 2) == e_col(F, 2, 0));
    // prime variant needs a nonnegative twist
    CHECK_THROWS_AS(twisted_pair_term_N(NElem{one, 1}, 0, 0, 1, true), std::domain_error);
}

TEST_CASE("pairing at level zero is the identity map") {
    for (int q : {2, 3}) {
        for (int d = 1; d <= 3; ++d) {
            CarlitzModel cm(q, d);
            RandK r(cm.field(), 7 + q * d);
            for (int s = 0; s < 5; ++s) {
                MatK W = r.dmat(d);
                CHECK(pair_E(cm, 0, W) == W);
                CHECK(pair_E(cm, 0, W, Pairing::F) == W);
            }
        }
    }
}

TEST_CASE("pairing for d = 1 is the Carlitz scalar") {
    // E_l(1,1;w) = sum_j w^{q^j} / (D_j l_{l-j}^{q^j})
    CarlitzModel cm(3, 1);
    const Field& F = cm.field();
    RandK r(F, 11);
    MatK W = r.dmat(1);
    for (int l = 0; l <= 3; ++l) {
        RatK s = RatK::zero(F);
        for (int j = 0; j <= l; ++j)
            s += W(0, 0).pow((long)std::pow(3, j)) / (cm.seq().D(j) * cm.seq().l(l - j).twist(j));
        CHECK(pair_E(cm, l, W)(0, 0) == s);
    }
}

TEST_CASE("dimension errors") {
    CarlitzModel cm(2, 2);
    MatK W = mat_identity(cm.field(), 3);
    CHECK_THROWS_AS(pair_E(cm, 1, W), DimensionMismatch);
    PolyT one = PolyT::constant(RatK::one(cm.field()));
    CHECK_THROWS_AS(delta1_finite(one, mat_identity(cm.field(), 2), 2), DimensionMismatch);
}

TEST_CASE("tau expansion terminates and reconstructs") {
    const Field& F = Field::get(2);
    int d = 2;
    RandK r(F, 5);
    for (int s = 0; s < 5; ++s) {
        std::vector<RatK> c;
        for (int i = 0; i < 7; ++i) c.push_back(r.rat(1));
        PolyT m(F, c);
        auto a = tau_expansion(m, d);
        PolyT back(F);
        for (std::size_t j = 0; j < a.size(); ++j)
            for (int i = 0; i < d; ++i)
                back += tau_M(PolyT::linear_power(F, RatK::theta(F), i), d, (int)j).scaled(a[j](i, 0));
        // a^j_i multiplies b_j^d (t - theta^{q^j})^i, which is tau_M^j (t - theta)^i
        CHECK(back == m);
    }
    // a step bound of zero forces the non-termination error on anything of degree >= d
    CHECK_THROWS_AS(tau_expansion(PolyT::linear_power(F, RatK::theta(F), 5), d, 0), ExpansionNonTerminating);
}

TEST_CASE("motive identities") {
    for (int q : {2, 3}) {
        for (int d = 1; d <= 3; ++d) {
            INFO("q=" << q << " d=" << d);
            expect_all_ok(motive_suite(q, d, 4, 20, 1000 + 10 * q + d));
        }
    }
}
