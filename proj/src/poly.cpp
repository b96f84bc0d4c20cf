#include "ffid/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffid {

namespace {

using Vec = std::vector<elem>;

void add_into(const Field& F, elem* r, const elem* b, std::size_t n) { F.axpy(r, b, n, 1); }
void sub_into(const Field& F, elem* r, const elem* b, std::size_t n) { F.axpy(r, b, n, F.neg(1)); }

void mul_school(const Field& F, const elem* a, std::size_t na, const elem* b, std::size_t nb, elem* r) {
    // r must hold na + nb - 1 zeroed entries
    if (na < nb) { std::swap(a, b); std::swap(na, nb); }
    for (std::size_t j = 0; j < nb; ++j)
        if (b[j]) F.axpy(r + j, a, na, b[j]);
}

constexpr std::size_t kKaratsuba = 96;

// r (size 2n-1, zeroed) = a*b with both of size n
void mul_kara(const Field& F, const elem* a, const elem* b, std::size_t n, elem* r) {
    if (n < kKaratsuba) {
        mul_school(F, a, n, b, n, r);
        return;
    }
    std::size_t h = n / 2, g = n - h;  // low part h, high part g >= h
    // low product
    mul_kara(F, a, b, h, r);
    // high product into r + 2h
    Vec hi(2 * g - 1, 0);
    mul_kara(F, a + h, b + h, g, hi.data());
    Vec sa(a + h, a + n), sb(b + h, b + n);
    add_into(F, sa.data(), a, h);
    add_into(F, sb.data(), b, h);
    Vec mid(2 * g - 1, 0);
    mul_kara(F, sa.data(), sb.data(), g, mid.data());
    sub_into(F, mid.data(), hi.data(), hi.size());
    sub_into(F, mid.data(), r, 2 * h - 1);
    add_into(F, r + 2 * h, hi.data(), hi.size());
    add_into(F, r + h, mid.data(), mid.size());
}

Vec mul_vec(const Field& F, const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    std::size_t na = a.size(), nb = b.size();
    if (std::min(na, nb) < kKaratsuba) {
        mul_school(F, a.data(), na, b.data(), nb, r.data());
        return r;
    }
    if (na == nb) {
        mul_kara(F, a.data(), b.data(), na, r.data());
        return r;
    }
    // unbalanced: split the longer operand into chunks of the shorter size
    const Vec& L = na > nb ? a : b;
    const Vec& S = na > nb ? b : a;
    std::size_t n = S.size();
    Vec chunk(n), prod(2 * n - 1);
    for (std::size_t off = 0; off < L.size(); off += n) {
        std::size_t len = std::min(n, L.size() - off);
        std::fill(chunk.begin(), chunk.end(), 0);
        std::copy(L.begin() + off, L.begin() + off + len, chunk.begin());
        std::fill(prod.begin(), prod.end(), 0);
        mul_kara(F, chunk.data(), S.data(), n, prod.data());
        std::size_t lim = std::min(prod.size(), r.size() - off);
        add_into(F, r.data() + off, prod.data(), lim);
    }
    return r;
}

void trim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// a <- a mod b, b monic and nonzero
void mod_monic_inplace(const Field& F, Vec& a, const Vec& b) {
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::size_t i = a.size() - 1;
        elem c = a[i];
        if (c) F.axpy(a.data() + i - db, b.data(), db, F.neg(c));
        a.pop_back();
        trim(a);
    }
}

void make_monic(const Field& F, Vec& a) {
    if (a.empty() || a.back() == 1) return;
    elem li = F.inv(a.back());
    Vec t(a.size());
    F.scale(t.data(), a.data(), a.size(), li);
    a.swap(t);
}

}  // namespace

const Field& PolyA::fld(const PolyA& o) const {
    if (F_) return *F_;
    if (o.F_) return *o.F_;
    return Field::get(2);  // both operands are zero without a field; any field works
}

PolyA PolyA::constant(const Field& F, elem a) { return PolyA(F, Vec{a}); }
PolyA PolyA::theta(const Field& F) { return PolyA(F, Vec{0, 1}); }
PolyA PolyA::monomial(const Field& F, elem a, long n) {
    if (a == 0) return PolyA(F);
    Vec v(n + 1, 0);
    v[n] = a;
    return PolyA(F, std::move(v));
}

PolyA PolyA::operator+(const PolyA& o) const {
    PolyA r = *this;
    r += o;
    return r;
}
PolyA PolyA::operator-(const PolyA& o) const {
    PolyA r = *this;
    r -= o;
    return r;
}
PolyA& PolyA::operator+=(const PolyA& o) {
    const Field& F = fld(o);
    F_ = &F;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    add_into(F, c_.data(), o.c_.data(), o.c_.size());
    trim();
    return *this;
}
PolyA& PolyA::operator-=(const PolyA& o) {
    const Field& F = fld(o);
    F_ = &F;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    if (&o == this) { c_.clear(); return *this; }
    sub_into(F, c_.data(), o.c_.data(), o.c_.size());
    trim();
    return *this;
}
PolyA PolyA::operator-() const {
    if (!F_) return *this;
    Vec v(c_.size());
    F_->scale(v.data(), c_.data(), c_.size(), F_->neg(1));
    return PolyA(*F_, std::move(v));
}
PolyA PolyA::operator*(const PolyA& o) const {
    const Field& F = fld(o);
    return PolyA(F, mul_vec(F, c_, o.c_));
}
PolyA PolyA::scaled(elem a) const {
    if (!F_ || a == 0) return F_ ? PolyA(*F_) : PolyA();
    Vec v(c_.size());
    F_->scale(v.data(), c_.data(), c_.size(), a);
    return PolyA(*F_, std::move(v));
}
PolyA PolyA::shifted(long n) const {
    if (is_zero()) return *this;
    Vec v(n, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return PolyA(*F_, std::move(v));
}

bool PolyA::operator<(const PolyA& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

void PolyA::divmod(const PolyA& a, const PolyA& b, PolyA& quo, PolyA& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& F = *b.F_;
    Vec r = a.c_;
    std::size_t db = b.c_.size() - 1;
    elem li = F.inv(b.lead());
    Vec qv(r.size() > db ? r.size() - db : 0, 0);
    while (r.size() > db) {
        std::size_t i = r.size() - 1;
        elem c = F.mul(r[i], li);
        qv[i - db] = c;
        if (c) F.axpy(r.data() + i - db, b.c_.data(), db, F.neg(c));
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    quo = PolyA(F, std::move(qv));
    rem = PolyA(F, std::move(r));
}

PolyA PolyA::operator/(const PolyA& b) const {
    PolyA q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}
PolyA PolyA::operator%(const PolyA& b) const {
    PolyA q, r;
    divmod(*this, b, q, r);
    return r;
}

PolyA PolyA::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(F_->inv(lead()));
}

PolyA PolyA::gcd(PolyA a, PolyA b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const Field& F = *a.F_;
    Vec x = std::move(a.c_), y = std::move(b.c_);
    if (x.size() < y.size()) x.swap(y);
    make_monic(F, y);
    while (!y.empty()) {
        mod_monic_inplace(F, x, y);
        x.swap(y);
        make_monic(F, y);
    }
    make_monic(F, x);
    return PolyA(F, std::move(x));
}

PolyA PolyA::pow(unsigned long n) const {
    const Field& F = fld(*this);
    PolyA r = constant(F, 1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

PolyA PolyA::inflate(long m) const {
    if (is_zero() || m == 1) return *this;
    if (m == 0) {
        elem s = 0;
        for (elem x : c_) s = F_->add(s, x);
        return constant(*F_, s);
    }
    Vec v((c_.size() - 1) * m + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * m] = c_[i];
    return PolyA(*F_, std::move(v));
}

PolyA PolyA::twist(int k) const {
    if (is_zero() || k == 0) return *this;
    long m = 1;
    for (int i = 0; i < k; ++i) m *= F_->q;
    return inflate(m);
}

elem PolyA::eval(elem x) const {
    if (!F_) return 0;
    elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
    return r;
}

std::string PolyA::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        elem a = c_[i];
        if (!a) continue;
        std::string cs = F_->elem_str(a);
        bool compound = cs.find('+') != std::string::npos;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += compound ? "(" + cs + ")" : cs;
            continue;
        }
        if (a != 1) s += (compound ? "(" + cs + ")" : cs) + "*";
        s += "θ";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace ffid
