#include "ffid/matk.hpp"

namespace ffid {

MatK mat_identity(const Field& F, int d) { return MatK::identity(d, RatK::one(F)); }

MatK mat_zero(const Field& F, int r, int c) { return MatK(r, c, RatK::zero(F)); }

MatK mat_scalar(const RatK& s, int d) {
    MatK m(d, d, RatK::zero(*s.field()));
    for (int i = 0; i < d; ++i) m(i, i) = s;
    return m;
}

MatK nilpotent_N(const Field& F, int d) {
    MatK m = mat_zero(F, d, d);
    for (int i = 0; i + 1 < d; ++i) m(i, i + 1) = RatK::one(F);
    return m;
}

MatK unit_e(const Field& F, int d, int i, int j) {
    MatK m = mat_zero(F, d, d);
    m(i - 1, j - 1) = RatK::one(F);
    return m;
}

MatK twist(const MatK& m, int k) {
    if (k == 0) return m;
    return m.map([k](const RatK& x) { return x.twist(k); });
}

MatK inverse(const MatK& m) {
    int n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const Field* F = nullptr;
    for (auto& x : m.data())
        if (x.field()) { F = x.field(); break; }
    if (!F) throw std::domain_error("singular matrix");
    MatK a = m, b = mat_identity(*F, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(b(piv, j), b(col, j));
            }
        RatK iv = a(col, col).inv();
        for (int j = 0; j < n; ++j) {
            if (!a(col, j).is_zero()) a(col, j) = a(col, j) * iv;
            if (!b(col, j).is_zero()) b(col, j) = b(col, j) * iv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            RatK f = a(r, col);
            for (int j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(r, j) = a(r, j) - f * a(col, j);
                if (!b(col, j).is_zero()) b(r, j) = b(r, j) - f * b(col, j);
            }
        }
    }
    return b;
}

bool is_upper_toeplitz(const MatK& m) {
    int n = m.rows();
    if (n != m.cols()) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j < i) {
                if (!m(i, j).is_zero()) return false;
            } else if (m(i, j) != m(0, j - i)) {
                return false;
            }
        }
    return true;
}

bool is_lower_unitriangular(const MatK& m) {
    int n = m.rows();
    if (n != m.cols()) return false;
    for (int i = 0; i < n; ++i) {
        if (!m(i, i).is_one()) return false;
        for (int j = i + 1; j < n; ++j)
            if (!m(i, j).is_zero()) return false;
    }
    return true;
}

Jet Jet::constant(const RatK& v, int n) {
    std::vector<RatK> c(n, RatK::zero(*v.field()));
    if (n > 0) c[0] = v;
    return Jet(std::move(c));
}

Jet Jet::linear_power(const RatK& a, const RatK& c, long e, int n) {
    const Field& F = a.field() ? *a.field() : *c.field();
    RatK u = a - c;
    std::vector<RatK> out(n, RatK::zero(F));
    if (u.is_zero()) {
        if (e < 0) throw PoleAtEvaluation("negative power of a factor vanishing at the expansion point");
        if (e < n) out[e] = RatK::one(F);
        return Jet(std::move(out));
    }
    // C(e, k) u^(e-k)
    RatK ui = u.inv();
    RatK pw = u.pow(e);
    for (int k = 0; k < n; ++k) {
        if (e >= 0 && k > e) break;
        int b = gbinom_mod(e, k, F.p);
        if (b) out[k] = pw.scaled(F.from_int(b));
        pw = pw * ui;
    }
    return Jet(std::move(out));
}

Jet Jet::operator*(const Jet& o) const {
    int n = std::min(size(), o.size());
    std::vector<RatK> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j) {
            if (c_[i].is_zero() || o.c_[j].is_zero()) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    return Jet(std::move(r));
}

Jet Jet::operator+(const Jet& o) const {
    int n = std::min(size(), o.size());
    std::vector<RatK> r(n);
    for (int i = 0; i < n; ++i) r[i] = c_[i] + o.c_[i];
    return Jet(std::move(r));
}

Jet Jet::operator-(const Jet& o) const {
    int n = std::min(size(), o.size());
    std::vector<RatK> r(n);
    for (int i = 0; i < n; ++i) r[i] = c_[i] - o.c_[i];
    return Jet(std::move(r));
}

Jet Jet::scaled(const RatK& s) const {
    std::vector<RatK> r(c_);
    for (auto& x : r) x = s * x;
    return Jet(std::move(r));
}

Jet Jet::reciprocal() const {
    int n = size();
    if (n == 0) return *this;
    if (c_[0].is_zero()) throw PoleAtEvaluation("reciprocal of a jet vanishing at its point");
    std::vector<RatK> r(n);
    RatK i0 = c_[0].inv();
    r[0] = i0;
    for (int k = 1; k < n; ++k) {
        RatK s;
        for (int j = 1; j <= k; ++j)
            if (!c_[j].is_zero() && !r[k - j].is_zero()) s += c_[j] * r[k - j];
        r[k] = -(s * i0);
    }
    return Jet(std::move(r));
}

Jet Jet::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    const Field& F = *c_[0].field();
    Jet r = Jet::constant(RatK::one(F), size()), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Jet Jet::twist(int k) const {
    std::vector<RatK> r(c_);
    for (auto& x : r) x = x.twist(k);
    return Jet(std::move(r));
}

MatK toeplitz_upper(const Jet& j) {
    int d = j.size();
    MatK m(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = r; c < d; ++c) m(r, c) = j[c - r];
    return m;
}

Jet toeplitz_row(const MatK& m) {
    std::vector<RatK> c(m.cols());
    for (int j = 0; j < m.cols(); ++j) c[j] = m(0, j);
    return Jet(std::move(c));
}

MatK dmat_inverse(const MatK& m) { return toeplitz_upper(toeplitz_row(m).reciprocal()); }

}  // namespace ffid
