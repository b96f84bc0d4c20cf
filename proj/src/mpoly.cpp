#include "ffid/mpoly.hpp"

#include <stdexcept>

namespace ffid {

const char* var_name(int v) {
    static const char* names[kNumVars] = {"x", "y", "z", "z'", "t", "y1", "y2", "y3"};
    return names[v];
}

namespace {

Mono mono_mul(Mono a, Mono b) {
    for (int v = 0; v < kNumVars; ++v)
        if (mono_exp(a, v) + mono_exp(b, v) > 255) throw std::overflow_error("exponent overflow in MPoly");
    return a + b;
}

Mono mono_set(Mono m, int v, int e) {
    m &= ~(Mono(0xff) << (8 * v));
    return m | (Mono(e) << (8 * v));
}

}  // namespace

MPoly::MPoly(const RatK& c) : F_(c.field()) {
    if (!c.is_zero()) t_[0] = c;
}

MPoly MPoly::var(const Field& F, int v) {
    MPoly p;
    p.F_ = &F;
    p.t_[Mono(1) << (8 * v)] = RatK::one(F);
    return p;
}

MPoly MPoly::constant(const Field& F, long long n) {
    MPoly p(RatK::integer(F, n));
    p.F_ = &F;
    return p;
}

int MPoly::degree_in(int v) const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, mono_exp(m, v));
    return d;
}

void MPoly::add_term(Mono m, const RatK& c) {
    if (c.is_zero()) return;
    if (!F_) F_ = c.field();
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    if (!r.F_) r.F_ = o.F_;
    for (auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    r.F_ = F_ ? F_ : o.F_;
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

MPoly MPoly::scaled(const RatK& c) const {
    MPoly r;
    r.F_ = F_ ? F_ : c.field();
    if (c.is_zero()) return r;
    for (auto& [m, x] : t_) r.t_.emplace(m, x * c);
    return r;
}

MPoly MPoly::pow(int n) const {
    const Field& F = F_ ? *F_ : Field::get(2);
    MPoly r = MPoly::constant(F, 1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

MPoly MPoly::hyperderive(int v, int j) const {
    MPoly r;
    r.F_ = F_;
    if (j == 0) return *this;
    for (auto& [m, c] : t_) {
        int e = mono_exp(m, v);
        if (e < j) continue;
        int b = binom_mod(e, j, c.field()->p);
        if (!b) continue;
        r.add_term(mono_set(m, v, e - j), c.scaled(c.field()->from_int(b)));
    }
    return r;
}

MPoly MPoly::substitute(int v, const MPoly& by) const {
    MPoly r;
    r.F_ = F_;
    std::vector<MPoly> pw{MPoly::constant(F_ ? *F_ : Field::get(2), 1)};
    for (auto& [m, c] : t_) {
        int e = mono_exp(m, v);
        while ((int)pw.size() <= e) pw.push_back(pw.back() * by);
        MPoly rest;
        rest.F_ = F_;
        rest.t_[mono_set(m, v, 0)] = c;
        r += rest * pw[e];
    }
    return r;
}

RatK MPoly::specialize(const std::map<int, RatK>& at) const {
    MPoly r = partial_specialize(at);
    if (r.is_zero()) return RatK::zero(F_ ? *F_ : Field::get(2));
    if (r.t_.size() != 1 || r.t_.begin()->first != 0)
        throw std::invalid_argument("specialize: assignment does not cover all variables");
    return r.t_.begin()->second;
}

MPoly MPoly::partial_specialize(const std::map<int, RatK>& at) const {
    MPoly r;
    r.F_ = F_;
    std::map<std::pair<int, int>, RatK> pw;
    for (auto& [m, c] : t_) {
        RatK coef = c;
        Mono rest = m;
        for (auto& [v, val] : at) {
            int e = mono_exp(m, v);
            if (!e) continue;
            auto key = std::make_pair(v, e);
            auto it = pw.find(key);
            if (it == pw.end()) it = pw.emplace(key, val.pow(e)).first;
            coef = coef * it->second;
            rest = mono_set(rest, v, 0);
        }
        r.add_term(rest, coef);
    }
    return r;
}

MPoly MPoly::twist(int k) const {
    MPoly r;
    r.F_ = F_;
    for (auto& [m, c] : t_) r.t_.emplace(m, c.twist(k));
    return r;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        std::string cs = it->second.str();
        bool unit = it->second.is_one();
        std::string mon;
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono_exp(it->first, v);
            if (!e) continue;
            if (!mon.empty()) mon += "*";
            mon += var_name(v);
            if (e > 1) mon += "^" + std::to_string(e);
        }
        if (mon.empty()) s += cs;
        else if (unit) s += mon;
        else s += "(" + cs + ")*" + mon;
    }
    return s;
}

MRat::MRat(MPoly n, MPoly d) : n_(std::move(n)), d_(std::move(d)) {
    if (d_.is_zero()) throw PoleAtEvaluation("zero denominator");
}

MRat::MRat(const MPoly& n) : n_(n) {
    // the zero quotient may lack a field; it keeps an empty denominator
    if (n.field()) d_ = MPoly::constant(*n.field(), 1);
}

MRat MRat::operator+(const MRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (d_ == o.d_) return MRat(n_ + o.n_, d_);
    return MRat(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
}

MRat MRat::operator-() const { return is_zero() ? *this : MRat(-n_, d_); }

MRat MRat::operator-(const MRat& o) const { return *this + (-o); }

MRat MRat::operator*(const MRat& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    return MRat(n_ * o.n_, d_ * o.d_);
}

bool MRat::operator==(const MRat& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (d_ == o.d_) return n_ == o.n_;
    return n_ * o.d_ == o.n_ * d_;
}

RatK MRat::specialize(const std::map<int, RatK>& at) const {
    if (is_zero()) return n_.field() ? RatK::zero(*n_.field()) : RatK();
    RatK dv = d_.specialize(at);
    if (dv.is_zero()) throw PoleAtEvaluation("denominator vanishes at the evaluation point");
    return n_.specialize(at) / dv;
}

DerivTable::DerivTable(const MRat& f, int u, int v, int n) : n_(n), tab_((std::size_t)n * n) {
    if (f.is_zero()) return;
    const MPoly& a = f.num();
    const MPoly& b = f.den();
    auto D = [&](const MPoly& p, int i, int j) { return p.hyperderive(u, i).hyperderive(v, j); };
    bool constant_den = b.terms().size() == 1 && b.terms().begin()->first == 0;
    if (constant_den) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) tab_[i * n + j] = MRat(D(a, i, j), b);
        return;
    }
    std::vector<MPoly> bp(2 * n);
    bp[0] = MPoly::constant(*b.field(), 1);
    for (int k = 1; k < 2 * n; ++k) bp[k] = bp[k - 1] * b;
    std::vector<MPoly> db((std::size_t)n * n), num((std::size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) db[i * n + j] = D(b, i, j);
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
            MPoly s = D(a, al, be) * bp[al + be];
            for (int i = 0; i <= al; ++i)
                for (int j = 0; j <= be; ++j) {
                    if (i == al && j == be) continue;
                    const MPoly& dbij = db[(al - i) * n + (be - j)];
                    if (dbij.is_zero() || num[i * n + j].is_zero()) continue;
                    s = s - num[i * n + j] * dbij * bp[al + be - 1 - i - j];
                }
            num[al * n + be] = s;
            tab_[al * n + be] = MRat(s, bp[al + be + 1]);
        }
}

}  // namespace ffid
