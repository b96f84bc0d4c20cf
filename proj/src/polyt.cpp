#include "ffid/polyt.hpp"

#include <sstream>
#include <stdexcept>

namespace ffid {

PolyT::PolyT(const Field& F, std::vector<RatK> c) : F_(&F), c_(std::move(c)) { trim(); }

void PolyT::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyT PolyT::constant(const RatK& c) { return PolyT(*c.field(), {c}); }

PolyT PolyT::t(const Field& F) { return PolyT(F, {RatK::zero(F), RatK::one(F)}); }

PolyT PolyT::linear_power(const Field& F, const RatK& c, int e) {
    PolyT lin(F, {-c, RatK::one(F)});
    return lin.pow(e);
}

PolyT PolyT::b(const Field& F, int k) {
    PolyT r = constant(RatK::one(F));
    for (int i = 0; i < k; ++i) r = r * linear_power(F, RatK::theta_qk(F, i), 1);
    return r;
}

RatK PolyT::coeff(int i) const {
    if (i >= 0 && i < (int)c_.size()) return c_[i];
    return RatK::zero(*F_);
}

PolyT PolyT::operator+(const PolyT& o) const {
    const Field& F = F_ ? *F_ : *o.F_;
    std::vector<RatK> r(std::max(c_.size(), o.c_.size()), RatK::zero(F));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return PolyT(F, std::move(r));
}

PolyT PolyT::operator-() const {
    PolyT r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

PolyT PolyT::operator-(const PolyT& o) const { return *this + (-o); }

PolyT PolyT::operator*(const PolyT& o) const {
    const Field& F = F_ ? *F_ : *o.F_;
    if (c_.empty() || o.c_.empty()) return PolyT(F);
    std::vector<RatK> r(c_.size() + o.c_.size() - 1, RatK::zero(F));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
    return PolyT(F, std::move(r));
}

PolyT PolyT::scaled(const RatK& s) const {
    PolyT r(*this);
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
}

PolyT PolyT::pow(int e) const {
    PolyT r = constant(RatK::one(*F_)), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

PolyT PolyT::twist(int k) const {
    PolyT r(*this);
    for (auto& x : r.c_) x = x.twist(k);
    return r;
}

RatK PolyT::eval(const RatK& a) const {
    RatK r = RatK::zero(*F_);
    for (int i = degree(); i >= 0; --i) r = r * a + c_[i];
    return r;
}

Jet PolyT::jet_at(const RatK& a, int n) const {
    // repeated synthetic division by (t - a) yields the Taylor coefficients in order
    std::vector<RatK> out(n, RatK::zero(*F_));
    std::vector<RatK> cur(c_);
    for (int i = 0; i < n && !cur.empty(); ++i) {
        // cur = (t - a) * quo + rem
        std::vector<RatK> quo(cur.size() - 1);
        RatK acc = RatK::zero(*F_);
        for (int k = (int)cur.size() - 1; k >= 0; --k) {
            acc = acc * a + cur[k];
            if (k > 0) quo[k - 1] = acc;
        }
        out[i] = acc;
        cur = std::move(quo);
    }
    return Jet(std::move(out));
}

PolyT PolyT::div_linear_power(const RatK& c, int e) const {
    std::vector<RatK> cur(c_);
    for (int s = 0; s < e; ++s) {
        if (cur.empty()) break;
        std::vector<RatK> quo(cur.size() - 1);
        RatK acc = RatK::zero(*F_);
        for (int k = (int)cur.size() - 1; k >= 0; --k) {
            acc = acc * c + cur[k];
            if (k > 0) quo[k - 1] = acc;
        }
        if (!acc.is_zero()) throw std::domain_error("polynomial not divisible by the linear power");
        cur = std::move(quo);
    }
    return PolyT(*F_, std::move(cur));
}

PolyT PolyT::from_jet(const Field& F, const Jet& j, const RatK& a) {
    PolyT r(F), lin = linear_power(F, a, 1), pw = constant(RatK::one(F));
    for (int i = 0; i < j.size(); ++i) {
        r += pw.scaled(j[i]);
        pw = pw * lin;
    }
    return r;
}

std::string PolyT::str() const {
    if (c_.empty()) return "0";
    std::ostringstream o;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) o << " + ";
        first = false;
        o << "(" << c_[i].str() << ")";
        if (i > 0) o << "*t^" << i;
    }
    return o.str();
}

VecT mat_apply(const MatK& m, const VecT& v) {
    if (m.cols() != (int)v.size()) throw DimensionMismatch("matrix and vector of different sizes");
    VecT r;
    for (int i = 0; i < m.rows(); ++i) {
        PolyT s(v[0].field());
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) s += v[j].scaled(m(i, j));
        r.push_back(s);
    }
    return r;
}

VecT vec_add(const VecT& a, const VecT& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vectors of different sizes");
    VecT r;
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

VecT vec_twist(const VecT& v, int k) {
    VecT r;
    for (auto& p : v) r.push_back(p.twist(k));
    return r;
}

}  // namespace ffid
