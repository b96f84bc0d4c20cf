#include <random>

#include "ffid/checks.hpp"
#include "ffid/diffmat.hpp"

namespace ffid {

namespace {

struct Gen {
    const Field& F;
    std::mt19937_64 g;
    Gen(const Field& f, std::uint64_t seed) : F(f), g(seed) {}

    elem el() { return (elem)(g() % F.q); }
    RatK coef() {
        RatK c = RatK::constant(F, el());
        if (g() % 2) c += RatK::theta(F).scaled(el());
        return c;
    }
    RatK nonzero_coef() {
        RatK c;
        while (c.is_zero()) c = coef();
        return c;
    }
    // random polynomial in the listed variables, each of degree <= deg
    MPoly poly(std::vector<int> vars, int deg) {
        MPoly r(RatK::zero(F));
        std::vector<int> e(vars.size(), 0);
        while (true) {
            if (g() % 3) {
                MPoly m(coef());
                for (std::size_t i = 0; i < vars.size(); ++i) m = m * MPoly::var(F, vars[i]).pow(e[i]);
                r += m;
            }
            std::size_t k = 0;
            while (k < e.size() && e[k] == deg) e[k++] = 0;
            if (k == e.size()) break;
            ++e[k];
        }
        return r;
    }
    MPoly nonzero_poly(std::vector<int> vars, int deg) {
        MPoly r;
        while (r.is_zero()) r = poly(vars, deg);
        return r;
    }
    // quotient with a denominator of the form 1 + (terms of positive degree)
    MRat rat(std::vector<int> vars, int deg) {
        MPoly den = MPoly::constant(F, 1);
        for (int v : vars) den += MPoly::var(F, v).scaled(coef());
        return MRat(poly(vars, deg), den);
    }
    RatK k_elem() {
        PolyA n(F, {el(), el(), el()}), d(F, {el(), el()});
        if (d.is_zero()) d = PolyA::constant(F, 1);
        return RatK(n, d);
    }
};

std::string dstr(int d) { return "d=" + std::to_string(d); }

}  // namespace

std::vector<Check> delta_lemma_suite(int q, int d, int instances, std::uint64_t seed) {
    const Field& F = Field::get(q);
    Gen G(F, seed);
    std::vector<Check> out;
    auto add = [&](Check c) { out.push_back(std::move(c)); };
    const MPoly x = MPoly::var(F, X), y = MPoly::var(F, Y), z = MPoly::var(F, Z), t = MPoly::var(F, T),
                zp = MPoly::var(F, ZP);

    {
        Check c{"criterion-delta (root determines a Delta-matrix)"};
        for (int it = 0; it < instances; ++it) {
            MRat f = it % 2 ? G.rat({X, Z}, 2) : MRat(G.poly({X, Z}, 2));
            MatR M = delta_matrix(f, X, Z, d);
            if (!is_delta_matrix(M, X, Z) || M(d - 1, 0) != f) fail_once(c, "instance " + std::to_string(it));
            if (M.anti_transpose() != delta_matrix(f, Z, X, d)) fail_once(c, "anti-transpose, instance " + std::to_string(it));
            ++c.instances;
        }
        add(c);
    }
    {
        Check c{"criterion-delta (predicate implies Delta-matrix)"};
        for (int it = 0; it < instances; ++it) {
            std::vector<MRat> a, b;
            for (int i = 0; i < d; ++i) {
                a.push_back(it % 3 == 0 ? G.rat({X}, 2) : MRat(G.poly({X}, 3)));
                b.push_back(it % 3 == 1 ? G.rat({Z}, 2) : MRat(G.poly({Z}, 3)));
            }
            MatR M = partial_matrix(a, X, d) * partial_matrix(b, Z, d).anti_transpose();
            bool pred = is_delta_matrix(M, X, Z);
            if (!pred || M != delta_matrix(M(d - 1, 0), X, Z, d)) fail_once(c, "instance " + std::to_string(it));
            if (d >= 2) {
                // a partial_x-matrix with unrelated columns: the predicate must reject it
                std::vector<MRat> cols;
                for (int i = 0; i < d; ++i) cols.push_back(MRat(G.poly({X, Z}, 2)));
                cols[1] = cols[1] + MRat(x * z * z * z);  // D_z of column 0 cannot match this
                MatR P = partial_matrix(cols, X, d);
                bool equal = P == delta_matrix(P(d - 1, 0), X, Z, d);
                bool p2 = is_delta_matrix(P, X, Z);
                if (p2 || equal) fail_once(c, "non-Delta matrix accepted, instance " + std::to_string(it));
            }
            ++c.instances;
        }
        add(c);
    }
    {
        Check c{"first-compatibility"};
        for (int it = 0; it < instances; ++it) {
            MRat f = G.rat({X}, 2), h = G.rat({Z}, 2);
            MRat g = it % 2 ? MRat(G.poly({X, Z}, 2)) : G.rat({X, Z}, 1);
            MatR lhs = d_matrix(f, X, d) * delta_matrix(g, X, Z, d) * d_matrix(h, Z, d);
            if (lhs != delta_matrix(f * g * h, X, Z, d)) fail_once(c, "instance " + std::to_string(it));
            ++c.instances;
        }
        add(c);
    }
    {
        Check c{"delta-groupoid"};
        for (int it = 0; it < instances; ++it) {
            MRat f = it % 3 == 0 ? G.rat({X, Y}, 1) : MRat(G.poly({X, Y}, 2));
            MRat g = it % 3 == 1 ? G.rat({Y, Z}, 1) : MRat(G.poly({Y, Z}, 2));
            MatR lhs = delta_matrix(f, X, Y, d) * delta_matrix(g, Y, Z, d);
            MatR rhs = delta_matrix(hyperderive(f * g, Y, d - 1), X, Z, d);
            if (lhs != rhs) fail_once(c, "instance " + std::to_string(it));
            ++c.instances;
        }
        add(c);
    }
    {
        Check c{"generic-delta"};
        for (int it = 0; it < instances; ++it) {
            std::vector<MRat> a, b;
            for (int i = 0; i < d; ++i) {
                a.push_back(it % 2 ? G.rat({X}, 2) : MRat(G.poly({X}, 3)));
                b.push_back(it % 2 ? MRat(G.poly({Z}, 3)) : G.rat({Z}, 2));
            }
            MRat phi;
            for (int i = 0; i < d; ++i) phi = phi + a[i] * b[d - 1 - i];
            MatR lhs = partial_matrix(a, X, d) * partial_matrix(b, Z, d).anti_transpose();
            if (lhs != delta_matrix(phi, X, Z, d)) fail_once(c, "instance " + std::to_string(it));
            ++c.instances;
        }
        add(c);
    }
    {
        Check c{"H_{x,y} (H_{z,t})^perp as a Delta-matrix"};
        MPoly root;
        for (int i = 1; i <= d; ++i) root += (x - y).pow(d - i) * (z - t).pow(i - 1);
        MatR lhs = h_matrix(X, y, d) * h_matrix(Z, t, d).anti_transpose();
        if (lhs != delta_matrix(MRat(root), X, Z, d)) fail_once(c, dstr(d));
        c.instances = 1;
        add(c);
    }
    {
        Check c{"M_{x,y} (H_{z,x})^perp = Delta_{x,z}(f_d)"};
        MatR lhs = m_matrix(x, y, d) * h_matrix(Z, x, d).anti_transpose();
        if (lhs != delta_matrix(MRat(fd_poly(F, d)), X, Z, d)) fail_once(c, dstr(d));
        // both sides are lower unitriangular
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                MRat want = i == j ? MRat(MPoly::constant(F, 1)) : MRat();
                if (lhs(i, j) != want) fail_once(c, "not lower unitriangular");
            }
        c.instances = 1;
        add(c);
    }
    {
        Check c{"Delta_{x,z}(f_d) applied to powers of z'-z"};
        std::vector<MRat> col;
        for (int i = 0; i < d; ++i) col.push_back(MRat((zp - z).pow(i)));
        MatR lhs = delta_matrix(MRat(fd_poly(F, d)), X, Z, d) * MatR::column(col);
        MatR rhs = partial_matrix({MRat(fd_poly(F, d, X, Y, ZP))}, X, d);
        if (lhs != rhs) fail_once(c, dstr(d));
        c.instances = 1;
        add(c);
    }
    {
        Check c{"f'_d = f_d and its recursion"};
        for (int dd = 0; dd <= d; ++dd) {
            MPoly fp;
            for (int j = 1; j <= dd; ++j)
                fp += (x - y).pow(dd - j) * (z - x).pow(j - 1) * MPoly::constant(F, binom_mod(dd, j, F.p));
            if (fp != fd_poly(F, dd)) fail_once(c, "f'_" + std::to_string(dd));
            if (dd >= 1 && fd_poly(F, dd) != (x - y) * fd_poly(F, dd - 1) + (z - y).pow(dd - 1))
                fail_once(c, "recursion at " + std::to_string(dd));
        }
        // D_{x,d-i}(f_d) = sum_j C(d, d-i+j) (x-y)^{i-j} (z-x)^{j-1}
        for (int i = 1; i <= d; ++i) {
            MPoly s;
            for (int j = 1; j <= i; ++j)
                s += (x - y).pow(i - j) * (z - x).pow(j - 1) * MPoly::constant(F, binom_mod(d, d - i + j, F.p));
            if (fd_poly(F, d).hyperderive(X, d - i) != s) fail_once(c, "first column entry " + std::to_string(i));
        }
        c.instances = d + 1;
        add(c);
    }
    {
        Check c{"f_d change of middle variable (third argument z)"};
        for (int dd = 1; dd <= d; ++dd) {
            MPoly s;
            for (int k = 0; k < dd; ++k)
                s += (t - y).pow(k) * fd_poly(F, dd - k, X, T, Z) * MPoly::constant(F, binom_mod(dd, k, F.p));
            if (s != fd_poly(F, dd)) fail_once(c, "d=" + std::to_string(dd));
        }
        c.instances = d;
        add(c);
    }
    {
        Check c{"f_d expansion in powers of y"};
        for (int dd = 1; dd <= d; ++dd) {
            MPoly s;
            for (int i = 0; i < dd; ++i) {
                MPoly quot;  // (x^n - z^n)/(x - z)
                int n = dd - i;
                for (int a = 0; a < n; ++a) quot += x.pow(a) * z.pow(n - 1 - a);
                int sign = i % 2 ? -1 : 1;
                s += quot * y.pow(i) * MPoly::constant(F, sign * binom_mod(dd, i, F.p));
            }
            if (s != fd_poly(F, dd)) fail_once(c, "d=" + std::to_string(dd));
        }
        c.instances = d;
        add(c);
    }
    {
        Check c{"f_d closed form and diagonal value"};
        for (int dd = 0; dd <= std::max(d, 5); ++dd) {
            MPoly f = fd_poly(F, dd);
            if ((z - x) * f != (z - y).pow(dd) - (x - y).pow(dd)) fail_once(c, "closed form d=" + std::to_string(dd));
            if (dd >= 1 && f.substitute(Y, z) != (x - z).pow(dd - 1)) fail_once(c, "f_d(x,z,z) d=" + std::to_string(dd));
        }
        c.instances = std::max(d, 5) + 1;
        add(c);
    }
    {
        Check c{"H groupoid and inverse"};
        for (int it = 0; it < instances; ++it) {
            RatK a = G.k_elem(), b = G.k_elem(), cc = G.k_elem();
            MatK Hab = h_matrix(a, b, d), Hbc = h_matrix(b, cc, d);
            if (Hab * Hbc != h_matrix(a, cc, d)) fail_once(c, "groupoid, instance " + std::to_string(it));
            if (inverse(Hab) != h_matrix(b, a, d)) fail_once(c, "inverse, instance " + std::to_string(it));
            if (h_matrix(a, a, d) != mat_identity(F, d)) fail_once(c, "H_{a,a}");
            if (!is_lower_unitriangular(Hab)) fail_once(c, "shape, instance " + std::to_string(it));
            for (int i = 0; i < d; ++i)
                if (Hab(i, d - 1) != (i == d - 1 ? RatK::one(F) : RatK::zero(F))) fail_once(c, "last column");
            ++c.instances;
        }
        // the symbolic construction specializes to the numeric one
        MatR Hs = h_matrix(X, y, d);
        RatK a = G.k_elem(), b = G.k_elem();
        std::map<int, RatK> at{{X, a}, {Y, b}};
        if (Hs.map([&](const MRat& e) { return MRat(MPoly(e.specialize(at))); }) != lift(h_matrix(a, b, d)))
            fail_once(c, "symbolic vs numeric");
        add(c);
    }
    {
        Check c{"d-matrix is multiplicative"};
        for (int it = 0; it < instances; ++it) {
            MRat f = G.rat({X}, 2), g = it % 2 ? G.rat({X}, 2) : MRat(G.poly({X, Y}, 2));
            if (d_matrix(f * g, X, d) != d_matrix(f, X, d) * d_matrix(g, X, d)) fail_once(c, "instance " + std::to_string(it));
            ++c.instances;
        }
        add(c);
    }
    {
        Check c{"Z-hat U = U-hat Z"};
        for (int it = 0; it < instances; ++it) {
            std::vector<RatK> zv, uv;
            for (int i = 0; i < d; ++i) {
                zv.push_back(G.k_elem());
                uv.push_back(G.k_elem());
            }
            MatK Zc = MatK::column(zv), Uc = MatK::column(uv);
            if (hat(Zc) * Uc != hat(Uc) * Zc) fail_once(c, "instance " + std::to_string(it));
            if (!is_upper_toeplitz(hat(Zc))) fail_once(c, "hat is not a d-matrix");
            ++c.instances;
        }
        add(c);
    }
    {
        Check c{"M_{theta,theta^{q^l}} equals the Taylor-coefficient matrix M_l"};
        for (int l = 0; l <= 3; ++l) {
            MatK a = m_matrix(RatK::theta(F), RatK::theta_qk(F, l), d);
            if (a != m_matrix_taylor(F, l, d)) fail_once(c, "l=" + std::to_string(l));
            ++c.instances;
        }
        add(c);
    }
    return out;
}

}  // namespace ffid
