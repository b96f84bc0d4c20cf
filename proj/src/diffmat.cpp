#include "ffid/diffmat.hpp"

namespace ffid {

std::vector<MRat> hyperderivs(const MRat& f, int v, int n) {
    std::vector<MRat> out(n);
    if (f.is_zero() || n == 0) return out;
    const MPoly& a = f.num();
    const MPoly& b = f.den();
    bool constant_den = b.terms().size() == 1 && b.terms().begin()->first == 0;
    if (constant_den) {
        for (int j = 0; j < n; ++j) out[j] = MRat(a.hyperderive(v, j), b);
        return out;
    }
    // D_j f = N_j / b^{j+1} with N_j = D_j(a) b^j - sum_{i<j} N_i D_{j-i}(b) b^{j-1-i}
    std::vector<MPoly> bp(n + 1), num(n);
    bp[0] = MPoly::constant(*b.field(), 1);
    for (int k = 1; k <= n; ++k) bp[k] = bp[k - 1] * b;
    for (int j = 0; j < n; ++j) {
        MPoly s = a.hyperderive(v, j) * bp[j];
        for (int i = 0; i < j; ++i) {
            MPoly db = b.hyperderive(v, j - i);
            if (db.is_zero() || num[i].is_zero()) continue;
            s = s - num[i] * db * bp[j - 1 - i];
        }
        num[j] = s;
        out[j] = MRat(s, bp[j + 1]);
    }
    return out;
}

MRat hyperderive(const MRat& f, int v, int j) { return hyperderivs(f, v, j + 1)[j]; }

MatR d_matrix(const MRat& f, int v, int d) {
    auto D = hyperderivs(f, v, d);
    MatR m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) m(i, j) = D[j - i];
    return m;
}

MatR partial_matrix(const std::vector<MRat>& fs, int v, int d) {
    int s = (int)fs.size();
    MatR m(d, s);
    for (int j = 0; j < s; ++j) {
        auto D = hyperderivs(fs[j], v, d);
        for (int r = 0; r < d; ++r) m(r, j) = D[d - 1 - r];
    }
    return m;
}

MatR delta_matrix(const MRat& f, int x, int z, int d) {
    DerivTable tab(f, x, z, d);
    MatR m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = tab.at(d - 1 - i, j);
    return m;
}

MatR identity_r(const Field& F, int d) { return MatR::identity(d, MRat(MPoly::constant(F, 1))); }

MatR lift(const MatK& m) {
    return m.map([](const RatK& x) { return MRat(MPoly(x)); });
}

MatR h_matrix(int a, const MPoly& b, int d) {
    const Field& F = *b.field();
    MPoly diff = MPoly::var(F, a) - b;
    std::vector<MRat> fs;
    for (int k = d - 1; k >= 0; --k) fs.push_back(MRat(diff.pow(k)));
    return partial_matrix(fs, a, d);
}

MatR m_matrix(const MPoly& a, const MPoly& b, int d) {
    const Field& F = a.field() ? *a.field() : *b.field();
    MatR base = identity_r(F, d);
    MRat diff(a - b);
    for (int i = 1; i < d; ++i) base(i, i - 1) = diff;  // 1 + (a-b) N^T
    MatR r = identity_r(F, d);
    for (int k = 0; k < d; ++k) r = r * base;
    return r;
}

MPoly fd_poly(const Field& F, int d, int x, int y, int z) {
    MPoly r;
    MPoly zy = MPoly::var(F, z) - MPoly::var(F, y), xy = MPoly::var(F, x) - MPoly::var(F, y);
    for (int j = 0; j < d; ++j) r += zy.pow(j) * xy.pow(d - 1 - j);
    return r;
}

MPoly fd_poly(const Field& F, int d) { return fd_poly(F, d, X, Y, Z); }

bool is_partial_matrix(const MatR& m, int v) {
    int d = m.rows();
    for (int j = 0; j < m.cols(); ++j) {
        auto D = hyperderivs(m(d - 1, j), v, d);
        for (int r = 0; r < d; ++r)
            if (m(r, j) != D[d - 1 - r]) return false;
    }
    return true;
}

bool is_delta_matrix(const MatR& m, int x, int z) {
    return is_partial_matrix(m, x) && is_partial_matrix(m.anti_transpose(), z);
}

MatK h_matrix(const RatK& a, const RatK& b, int d) {
    const Field& F = a.field() ? *a.field() : *b.field();
    RatK u = a - b;
    MatK m = mat_zero(F, d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c <= r; ++c) {
            int bn = binom_mod(d - 1 - c, d - 1 - r, F.p);
            if (bn) m(r, c) = u.pow(r - c).scaled(F.from_int(bn));
        }
    return m;
}

MatK m_matrix(const RatK& a, const RatK& b, int d) {
    const Field& F = a.field() ? *a.field() : *b.field();
    MatK base = mat_identity(F, d);
    RatK u = a - b;
    for (int i = 1; i < d; ++i) base(i, i - 1) = u;
    MatK r = mat_identity(F, d);
    for (int k = 0; k < d; ++k) r = r * base;
    return r;
}

MatK m_matrix_taylor(const Field& F, int l, int d) {
    // coefficients a_i of (t - theta^{q^l})^d in powers of (t - theta)
    Jet a = Jet::linear_power(RatK::theta(F), RatK::theta_qk(F, l), d, d + 1);
    MatK m = mat_zero(F, d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c <= r; ++c) m(r, c) = a[d - (r - c)];
    return m;
}

MatK hat(const MatK& column) {
    int d = column.rows();
    std::vector<RatK> z(d);
    for (int i = 0; i < d; ++i) z[i] = column(d - 1 - i, 0);  // z_0 is the bottom entry
    return toeplitz_upper(Jet(z));
}

BiJet::BiJet(int d, const Field& F) : d_(d), c_((std::size_t)d * d, RatK::zero(F)) {}

BiJet BiJet::outer(const Jet& u, const Jet& v) {
    int d = u.size();
    BiJet r(d, *u[0].field());
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (!u[a].is_zero() && !v[b].is_zero()) r.at(a, b) = u[a] * v[b];
    return r;
}

BiJet BiJet::operator+(const BiJet& o) const {
    BiJet r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

BiJet BiJet::operator*(const BiJet& o) const {
    BiJet r = *this;
    for (auto& x : r.c_) x = RatK();
    for (int a1 = 0; a1 < d_; ++a1)
        for (int b1 = 0; b1 < d_; ++b1) {
            if (at(a1, b1).is_zero()) continue;
            for (int a2 = 0; a1 + a2 < d_; ++a2)
                for (int b2 = 0; b1 + b2 < d_; ++b2)
                    if (!o.at(a2, b2).is_zero()) r.at(a1 + a2, b1 + b2) += at(a1, b1) * o.at(a2, b2);
        }
    return r;
}

MatK BiJet::delta() const {
    MatK m(d_, d_);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) m(i, j) = at(d_ - 1 - i, j);
    return m;
}

MatK delta_fd_at(const RatK& x0, const RatK& y0, const RatK& z0, const Jet& A, const Jet& B, int d) {
    const Field& F = *x0.field();
    BiJet acc(d, F);
    for (int j = 0; j < d; ++j) {
        // (z - y)^j (x - y)^{d-1-j}
        Jet jx = Jet::linear_power(x0, y0, d - 1 - j, d) * A;
        Jet jz = Jet::linear_power(z0, y0, j, d) * B;
        acc = acc + BiJet::outer(jx, jz);
    }
    return acc.delta();
}

}  // namespace ffid
