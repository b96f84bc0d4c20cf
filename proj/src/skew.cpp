#include "ffid/skew.hpp"

namespace ffid {

SkewPoly::SkewPoly(const Field& F, int d, std::vector<MatK> coeffs) : F_(&F), d_(d), c_(std::move(coeffs)) {
    for (auto& m : c_)
        if (m.rows() != d || m.cols() != d) throw DimensionMismatch("skew coefficient of the wrong size");
    trim();
}

SkewPoly SkewPoly::one(const Field& F, int d) { return SkewPoly(F, d, {mat_identity(F, d)}); }

SkewPoly SkewPoly::monomial(const MatK& m, int i) {
    const Field* F = nullptr;
    for (auto& x : m.data())
        if (x.field()) { F = x.field(); break; }
    std::vector<MatK> c(i + 1, mat_zero(*F, m.rows(), m.rows()));
    c[i] = m;
    return SkewPoly(*F, m.rows(), std::move(c));
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

MatK SkewPoly::coeff(int i) const {
    if (i >= 0 && i < (int)c_.size()) return c_[i];
    return mat_zero(*F_, d_, d_);
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    if (d_ != o.d_) throw DimensionMismatch("skew polynomials of different sizes");
    std::size_t n = std::max(c_.size(), o.c_.size());
    std::vector<MatK> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = coeff((int)i) + o.coeff((int)i);
    return SkewPoly(*F_, d_, std::move(r));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
    if (d_ != o.d_) throw DimensionMismatch("skew polynomials of different sizes");
    std::size_t n = std::max(c_.size(), o.c_.size());
    std::vector<MatK> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = coeff((int)i) - o.coeff((int)i);
    return SkewPoly(*F_, d_, std::move(r));
}

SkewPoly SkewPoly::mul_trunc(const SkewPoly& o, int n) const {
    if (d_ != o.d_) throw DimensionMismatch("skew polynomials of different sizes");
    if (c_.empty() || o.c_.empty()) return SkewPoly(*F_, d_);
    int top = std::min<int>(n, (int)(c_.size() + o.c_.size()) - 2);
    std::vector<MatK> r(top + 1, mat_zero(*F_, d_, d_));
    // (A tau^i)(B tau^j) = A B^(i) tau^(i+j)
    for (int i = 0; i < (int)c_.size() && i <= top; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < (int)o.c_.size() && i + j <= top; ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * twist(o.c_[j], i);
        }
    }
    return SkewPoly(*F_, d_, std::move(r));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    return mul_trunc(o, (int)(c_.size() + o.c_.size()));
}

SkewPoly SkewPoly::truncated(int n) const {
    std::vector<MatK> r;
    for (int i = 0; i < (int)c_.size() && i <= n; ++i) r.push_back(c_[i]);
    return SkewPoly(*F_, d_, std::move(r));
}

int SkewPoly::first_difference(const SkewPoly& o) const {
    std::size_t n = std::max(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (coeff((int)i) != o.coeff((int)i)) return (int)i;
    return -1;
}

bool SkewPoly::operator==(const SkewPoly& o) const { return d_ == o.d_ && first_difference(o) < 0; }

}  // namespace ffid
