#include "ffid/kinf.hpp"

#include <algorithm>
#include <sstream>

namespace ffid {

namespace {

constexpr long kCeil = 1L << 60;

long clampl(long x) { return std::max(LaurentVal::kFloor, std::min(kCeil, x)); }

elem sign_elem(const Field& F, long n) { return (n % 2) ? F.neg(1) : 1; }

}  // namespace

long sat_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) return a < 0 ? LaurentVal::kFloor : kCeil;
    return clampl(r);
}

long sat_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) return ((a < 0) != (b < 0)) ? LaurentVal::kFloor : kCeil;
    return clampl(r);
}

long ipow_sat(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r = sat_mul(r, b);
    return r;
}

long deg_l(int q, int i) {
    long s = 0, t = 1;
    for (int j = 1; j <= i; ++j) {
        t = sat_mul(t, q);
        s = sat_add(s, t);
    }
    return s;
}

// ---------------------------------------------------------------- LaurentVal

LaurentVal LaurentVal::exact(const PolyA& p, long shift) {
    LaurentVal x(*p.field());
    x.p_ = p;
    x.base_ = shift;
    x.normalize();
    return x;
}

LaurentVal LaurentVal::monomial(const Field& F, elem c, long e) {
    LaurentVal x(F);
    x.p_ = PolyA::constant(F, c);
    x.base_ = e;
    x.normalize();
    return x;
}

LaurentVal LaurentVal::unknown(const Field& F, long lo) {
    LaurentVal x(F);
    x.lo_ = clampl(lo);
    return x;
}

LaurentVal LaurentVal::from_ratk(const RatK& r, long lo) {
    const Field& F = *r.field();
    if (r.is_zero()) return LaurentVal(F);
    LaurentVal n = exact(r.num()), d = exact(r.den());
    if (r.den().deg() == 0) return (n * LaurentVal::monomial(F, F.inv(r.den()[0]), 0)).truncated(lo);
    return (n * d.inv(sat_add(lo, -n.top()))).truncated(lo);
}

void LaurentVal::normalize() {
    if (p_.is_zero()) {
        base_ = 0;
        return;
    }
    if (!is_exact() && base_ < lo_) {
        if (top() < lo_) {
            p_ = PolyA(*F_);
            base_ = 0;
            return;
        }
        p_ = slice_from(lo_);
        base_ = lo_;
    }
    const auto& c = p_.coeffs();
    std::size_t z = 0;
    while (z < c.size() && c[z] == 0) ++z;
    if (z > 0) {
        p_ = PolyA(*F_, std::vector<elem>(c.begin() + (long)z, c.end()));
        base_ += (long)z;
    }
}

PolyA LaurentVal::slice_from(long e) const {
    if (e <= base_) return p_;
    long off = e - base_;
    const auto& c = p_.coeffs();
    if (off >= (long)c.size()) return PolyA(*F_);
    return PolyA(*F_, std::vector<elem>(c.begin() + off, c.end()));
}

long LaurentVal::top() const { return p_.is_zero() ? kDegNegInf : base_ + p_.deg(); }

long LaurentVal::bound() const {
    if (!p_.is_zero()) return top();
    return is_exact() ? kDegNegInf : lo_ - 1;
}

elem LaurentVal::coeff(long e) const {
    if (!is_exact() && e < lo_) throw PrecisionExhausted("coefficient below the known precision");
    if (p_.is_zero() || e < base_ || e > top()) return 0;
    return p_[(std::size_t)(e - base_)];
}

LaurentVal LaurentVal::truncated(long e) const {
    if (!is_exact() && e <= lo_) return *this;
    LaurentVal x = *this;
    x.lo_ = clampl(e);
    x.normalize();
    return x;
}

LaurentVal LaurentVal::operator+(const LaurentVal& o) const {
    long lo = std::max(lo_, o.lo_);
    LaurentVal a = lo == kExact ? *this : truncated(lo);
    LaurentVal b = lo == kExact ? o : o.truncated(lo);
    LaurentVal r(*F_);
    r.lo_ = lo;
    if (a.p_.is_zero()) {
        r.p_ = b.p_;
        r.base_ = b.base_;
    } else if (b.p_.is_zero()) {
        r.p_ = a.p_;
        r.base_ = a.base_;
    } else {
        long base = std::min(a.base_, b.base_);
        r.p_ = a.p_.shifted(a.base_ - base) + b.p_.shifted(b.base_ - base);
        r.base_ = base;
    }
    r.normalize();
    return r;
}

LaurentVal LaurentVal::operator-() const { return scaled(F_->neg(1)); }

LaurentVal LaurentVal::operator-(const LaurentVal& o) const { return *this + (-o); }

LaurentVal LaurentVal::scaled(elem c) const {
    LaurentVal x = *this;
    x.p_ = p_.scaled(c);
    x.normalize();
    return x;
}

LaurentVal LaurentVal::operator*(const LaurentVal& o) const {
    if ((p_.is_zero() && is_exact()) || (o.p_.is_zero() && o.is_exact())) return LaurentVal(*F_);
    long lo = kExact;
    if (!is_exact() || !o.is_exact()) {
        lo = kFloor;
        if (!o.is_exact() && !p_.is_zero()) lo = std::max(lo, sat_add(top(), o.lo_));
        if (!is_exact() && !o.p_.is_zero()) lo = std::max(lo, sat_add(o.top(), lo_));
        if (!is_exact() && !o.is_exact()) lo = std::max(lo, sat_add(sat_add(lo_, o.lo_), -1));
    }
    if (p_.is_zero() || o.p_.is_zero()) return unknown(*F_, lo);
    PolyA a = p_, b = o.p_;
    long ba = base_, bb = o.base_;
    if (lo != kExact) {
        // terms of one factor below lo - top(other) only reach exponents below lo
        long ca = sat_add(lo, -o.top()), cb = sat_add(lo, -top());
        if (ca > ba) {
            a = slice_from(ca);
            ba = ca;
        }
        if (cb > bb) {
            b = o.slice_from(cb);
            bb = cb;
        }
    }
    LaurentVal r(*F_);
    r.lo_ = lo;
    if (a.is_zero() || b.is_zero()) return unknown(*F_, lo);
    r.p_ = a * b;
    r.base_ = ba + bb;
    r.normalize();
    return r;
}

LaurentVal LaurentVal::inv(long lo_target) const {
    if (p_.is_zero()) throw PrecisionExhausted("inverse of a value not known to be nonzero");
    const Field& F = *F_;
    long v = top();
    if (is_exact() && p_.deg() == 0) return monomial(F, F.inv(p_[0]), -v);
    long lo_res;
    if (is_exact()) {
        if (lo_target == kExact) throw std::invalid_argument("inverse of an exact series needs a target precision");
        lo_res = lo_target;
    } else {
        // relative precision carries over: x = X(1 + e), |e| < theta^{lo - v}
        lo_res = sat_add(lo_, -sat_mul(2, v));
        if (lo_target != kExact) lo_res = std::max(lo_res, lo_target);
    }
    long M = sat_add(sat_add(-v, -lo_res), 1);
    if (M <= 0) return unknown(F, lo_res);
    if (M > (1L << 26)) throw PrecisionExhausted("inverse precision out of range");
    // x = theta^v sum_m c_m s^m with s = 1/theta
    const auto& pc = p_.coeffs();
    long L = std::min<long>((long)pc.size(), M);
    std::vector<elem> c(L);
    for (long m = 0; m < L; ++m) c[m] = pc[pc.size() - 1 - m];
    std::vector<elem> e(M, 0), acc(M, 0);
    elem i0 = F.inv(c[0]), ni0 = F.neg(i0);
    for (long m = 0; m < M; ++m) {
        e[m] = m == 0 ? i0 : F.mul(ni0, acc[m]);
        if (e[m] == 0) continue;
        long n = std::min(L - 1, M - 1 - m);
        if (n > 0) F.axpy(acc.data() + m + 1, c.data() + 1, (std::size_t)n, e[m]);
    }
    std::reverse(e.begin(), e.end());
    LaurentVal r(F);
    r.p_ = PolyA(F, std::move(e));
    r.base_ = -v - (M - 1);
    r.lo_ = lo_res;
    r.normalize();
    return r;
}

LaurentVal LaurentVal::pow(long n, long lo_target) const {
    if (n == 0) return one(*F_);
    if (n < 0) {
        LaurentVal b;
        if (is_exact() && !(p_.deg() == 0)) {
            if (lo_target == kExact) throw std::invalid_argument("negative power of an exact series needs a target precision");
            // x^{-n} has valuation n v; its relative digits are those of 1/x
            long v = top();
            b = inv(sat_add(lo_target, sat_mul(-n - 1, v)));
        } else {
            b = inv();
        }
        return b.pow(-n, lo_target);
    }
    LaurentVal r = one(*F_), b = *this;
    long m = n;
    while (true) {
        if (m & 1) r = r * b;
        m >>= 1;
        if (!m) break;
        b = b * b;
        if (lo_target != kExact) b = b.truncated(sat_add(lo_target, -sat_mul(m, std::max(0L, b.bound()))));
    }
    return lo_target == kExact ? r : r.truncated(lo_target);
}

LaurentVal LaurentVal::frob(int k) const {
    long Q = ipow_sat(F_->q, k);
    LaurentVal x = *this;
    x.p_ = p_.inflate(Q);
    x.base_ = sat_mul(base_, Q);
    if (!is_exact()) x.lo_ = sat_add(sat_mul(sat_add(lo_, -1), Q), 1);
    x.normalize();
    return x;
}

std::string LaurentVal::str(int terms) const {
    std::ostringstream os;
    int shown = 0;
    if (!p_.is_zero()) {
        for (long e = top(); e >= base_ && shown < terms; --e) {
            elem c = p_[(std::size_t)(e - base_)];
            if (!c) continue;
            if (shown) os << " + ";
            if (c != 1) os << F_->elem_str(c) << "*";
            os << "θ^" << e;
            ++shown;
        }
    }
    bool more = !p_.is_zero() && shown == terms;
    if (more) os << " + ...";
    if (!is_exact()) os << (shown ? " + " : "") << "O(θ^" << (lo_ - 1) << ")";
    else if (!shown) os << "0";
    return os.str();
}

long agree_from(const LaurentVal& a, const LaurentVal& b) {
    LaurentVal d = a - b;
    if (!d.known_zero()) return d.top() + 1;
    return d.lo();
}

long agree_digits(const LaurentVal& a, const LaurentVal& b) {
    long e = agree_from(a, b);
    long v = a.known_zero() ? b.top() : a.top();
    if (v == kDegNegInf) return 0;
    if (e == LaurentVal::kExact) return kCeil;
    return std::max(0L, v - e + 1);
}

// ---------------------------------------------------------------- series in t

LaurentVal TruncSeriesT::jet(const LaurentVal& a, int i) const {
    const Field& F = a.field();
    long A = a.top();
    int T = degree_bound();
    LaurentVal sum(F);
    LaurentVal ap = LaurentVal::one(F);
    for (int n = i; n <= T; ++n) {
        int b = binom_mod(n, i, F.p);
        if (b) sum += (c[n] * ap).scaled(F.from_int(b));
        ap = ap * a;
    }
    if (has_tail) {
        if (tail_s <= A) throw PrecisionExhausted("t-degree bound too small for this evaluation point");
        long e = sat_add(sat_add(tail_b, -tail_s), sat_mul(A, T + 1 - i));
        sum = sum.truncated(sat_add(e, 1));
    }
    return sum;
}

TruncSeriesT TruncSeriesT::frob(int k) const {
    TruncSeriesT r = *this;
    long Q = ipow_sat(c.empty() ? 2 : c[0].field().q, k);
    for (auto& x : r.c) x = x.frob(k);
    r.tail_b = sat_mul(tail_b, Q);
    r.tail_s = sat_mul(tail_s, Q);
    return r;
}

TruncSeriesT series_mul(const TruncSeriesT& a, const TruncSeriesT& b) {
    const Field& F = a.c[0].field();
    TruncSeriesT r;
    int Ta = a.degree_bound(), Tb = b.degree_bound();
    int T = (a.has_tail || b.has_tail) ? std::min(Ta, Tb) : Ta + Tb;
    r.c.assign(T + 1, LaurentVal(F));
    for (int i = 0; i <= std::min(Ta, T); ++i)
        for (int j = 0; j <= std::min(Tb, T - i); ++j) r.c[i + j] += a.c[i] * b.c[j];
    if (a.has_tail || b.has_tail) {
        // no generic bound; callers that need the tail supply it
        r.has_tail = true;
        r.tail_b = kCeil;
        r.tail_s = 0;
    }
    return r;
}

TruncSeriesT series_mul_poly(const TruncSeriesT& a, const std::vector<LaurentVal>& poly) {
    const Field& F = a.c[0].field();
    int T = a.degree_bound(), e = (int)poly.size() - 1;
    TruncSeriesT r;
    r.c.assign(T + e + 1, LaurentVal(F));
    long V = LaurentVal::kFloor;
    for (int i = 0; i <= e; ++i) {
        V = std::max(V, poly[i].bound());
        for (int n = 0; n <= T; ++n) r.c[n + i] += poly[i] * a.c[n];
    }
    r.has_tail = a.has_tail;
    r.tail_b = sat_add(a.tail_b, V);
    r.tail_s = a.tail_s;
    return r;
}

TruncSeriesT series_scale(const TruncSeriesT& a, const LaurentVal& s) {
    TruncSeriesT r = a;
    for (auto& x : r.c) x = x * s;
    r.tail_b = sat_add(a.tail_b, s.bound());
    return r;
}

namespace {

// coefficients of (t - a)^e
std::vector<LaurentVal> linear_power(const LaurentVal& a, int e) {
    const Field& F = a.field();
    std::vector<LaurentVal> v{LaurentVal::one(F)};
    for (int i = 0; i < e; ++i) {
        std::vector<LaurentVal> w(v.size() + 1, LaurentVal(F));
        for (std::size_t n = 0; n < v.size(); ++n) {
            w[n + 1] += v[n];
            w[n] -= v[n] * a;
        }
        v = std::move(w);
    }
    return v;
}

// (f - f(a)) / (t - a), computed from the top; the degree bound drops by one
TruncSeriesT divide_linear(const TruncSeriesT& f, const LaurentVal& a) {
    const Field& F = a.field();
    int T = f.degree_bound();
    if (T < 1) throw PrecisionExhausted("t-degree bound exhausted by the division algorithm");
    long A = a.top();
    TruncSeriesT r;
    r.c.assign(T, LaurentVal(F));
    r.c[T - 1] = f.c[T];
    for (int n = T - 1; n >= 1; --n) r.c[n - 1] = f.c[n] + a * r.c[n];
    r.has_tail = f.has_tail;
    r.tail_b = f.tail_b;
    r.tail_s = f.tail_s;
    if (f.has_tail) {
        if (f.tail_s <= A) throw PrecisionExhausted("t-degree bound too small for this evaluation point");
        // the coefficients beyond T add at most tail_b - tail_s + A (T - 1 - n) to r_n
        for (int n = 0; n < T; ++n)
            r.c[n] = r.c[n].truncated(sat_add(sat_add(sat_add(f.tail_b, -f.tail_s), sat_mul(A, T - 1 - n)), 1));
    }
    return r;
}

long sigma(int q, long m) { return deg_l(q, (int)std::max(0L, m)); }

// (H^{(k)})^d, H = prod_{i>=1} (1 - t/theta^{q^i}), from I factors. Coefficient n is
// also cut at floor[n] to keep the work proportional to what is used later.
TruncSeriesT h_power(const Field& F, int k, int d, int T, int I, const std::vector<long>& floor) {
    int q = F.q;
    long Qk = ipow_sat(q, k);
    TruncSeriesT H;
    H.c.assign(T + 1, LaurentVal(F));
    H.c[0] = LaurentVal::one(F);
    for (int i = 1; i <= I; ++i) {
        LaurentVal x = LaurentVal::monomial(F, F.neg(1), -sat_mul(Qk, ipow_sat(q, i)));
        for (int n = T; n >= 1; --n) H.c[n] = (H.c[n] + x * H.c[n - 1]).truncated(floor[n]);
    }
    // the omitted factors touch coefficient n through monomials of valuation at most
    // -Qk (sigma(n-1) + q^{I+1})
    long qI = ipow_sat(q, I + 1);
    for (int n = 1; n <= T; ++n)
        H.c[n] = H.c[n].truncated(sat_add(-sat_mul(Qk, sat_add(sigma(q, n - 1), qI)), 1));
    // H is not a polynomial: keep the product at degree T, the tail is set below
    H.has_tail = true;
    H.tail_b = kCeil;
    TruncSeriesT R = H;
    for (int e = 1; e < d; ++e) R = series_mul(R, H);
    for (int n = 0; n <= T; ++n) R.c[n] = R.c[n].truncated(floor[n]);
    // v(coeff_n of H^d) <= -Qk d sigma(floor(n/d)); linearized from a point u <= floor((T+1)/d)
    long u = (T + 1) / d;
    while (u > 0 && sat_mul(sat_mul(Qk, ipow_sat(q, u + 1)), T + d + 1) >= (1L << 55)) --u;
    long su = sat_mul(Qk, ipow_sat(q, u + 1));
    R.has_tail = true;
    R.tail_s = su;
    R.tail_b = -sat_add(sat_mul(sat_mul(Qk, d), sigma(q, u)), sat_mul(su, (long)T - d + 1 - (long)d * u));
    return R;
}

}  // namespace

// ---------------------------------------------------------------- pi and Omega

LaurentVal pi_product(const Field& F, long lo) {
    int q = F.q;
    LaurentVal P = LaurentVal::one(F);
    for (int i = 1;; ++i) {
        long e = sat_add(1, -ipow_sat(q, i));
        // the rest of the product is 1 + O(theta^e)
        if (e < lo) break;
        LaurentVal f = LaurentVal::one(F) + LaurentVal::monomial(F, F.neg(1), e);
        P = (P * f).truncated(lo);
    }
    return P.truncated(lo);
}

LaurentVal pi_power(const Field& F, long m, long n_digits) {
    int q = F.q;
    if (m % (q - 1) != 0)
        throw RamifiedExponent("pi-tilde^" + std::to_string(m) + " is not in K_infinity for q = " + std::to_string(q));
    if (m == 0) return LaurentVal::one(F);
    long n = m / (q - 1);
    // pi^{n(q-1)} = (-1)^n theta^{nq} prod_{i>=1} (1 - theta^{1-q^i})^{-m}
    LaurentVal P = pi_product(F, 1 - n_digits);
    return P.pow(-m) * LaurentVal::monomial(F, sign_elem(F, n), sat_mul(n, q));
}

TruncSeriesT omega_ratio(const Field& F, int d, int t_deg, long n_digits, bool twisted) {
    int q = F.q;
    long lo = -n_digits;
    int I = 1;
    while (ipow_sat(q, I + 1) < n_digits + 1) ++I;
    std::vector<long> floor(t_deg + 1, lo);
    // H(t) = prod_{i>=1}(1 - t/theta^{q^i}); pi/omega^{(1)} = -H/P and pi/omega = (theta - t) H/P
    TruncSeriesT R = h_power(F, 0, d, t_deg, I, floor);
    LaurentVal Pinv = pi_product(F, lo).inv();
    R = series_scale(R, (twisted ? -Pinv : Pinv).pow(d));
    if (!twisted)
        R = series_mul_poly(R, linear_power(LaurentVal::monomial(F, 1, 1), d));
    for (auto& x : R.c) x = x.truncated(lo);
    return R;
}

// ---------------------------------------------------------------- series values

namespace {

long term_exponent(int q, const std::vector<int>& mrow, const std::vector<int>& nrow, const std::vector<long>& idx) {
    long e = 0;
    for (std::size_t j = 0; j < idx.size(); ++j)
        e = sat_add(e, sat_add(sat_mul(mrow[j], ipow_sat(q, idx[j])), -sat_mul(nrow[j], deg_l(q, (int)idx[j]))));
    return e;
}

}  // namespace

LaurentVal series_value(const Field& F, const std::vector<int>& mrow, const std::vector<int>& nrow, long n_digits) {
    int q = F.q;
    int r = (int)mrow.size();
    if (r == 0 || (int)nrow.size() != r) throw std::invalid_argument("rows of unequal or zero length");
    for (int j = 0; j < r; ++j)
        if (nrow[j] < 1 || (long)mrow[j] * (q - 1) >= (long)nrow[j] * q)
            throw DivergentSpec("the series diverges unless m_j (q-1) < n_j q with n_j >= 1");
    // each term's exponent strictly decreases in every index, so the tail from i_1 = K
    // is bounded by the term at (K, r-2, ..., 0)
    std::vector<long> idx(r);
    for (int j = 0; j < r; ++j) idx[j] = r - 1 - j;
    long v0 = term_exponent(q, mrow, nrow, idx);
    long lo = v0 - n_digits + 1;
    int K = r;
    auto tail = [&](int k) {
        idx[0] = k;
        return term_exponent(q, mrow, nrow, idx);
    };
    while (tail(K) >= lo) ++K;
    LSums ls(F);
    Frac s = ls.polylog_lt(K, mrow, nrow);
    LaurentVal v = LaurentVal::from_ratk(RatK(s.num, s.den), lo);
    return v.truncated(std::max(lo, tail(K) + 1));
}

RatK power_sum_exact(ClassicalSeq& s, int i, int n) {
    const Field& F = *s.D(0).field();
    int q = F.q;
    if (i == 0) return RatK::one(F);
    // e_i(x) = prod_{deg b < i} (x - b) = sum_j alpha_j x^{q^j}
    std::vector<RatK> alpha(i + 1);
    for (int j = 0; j <= i; ++j) {
        // with l_m = prod (theta - theta^{q^j}) the usual signs (-1)^{i-j} cancel
        alpha[j] = s.D(i) / (s.D(j) * s.l(i - j).twist(j));
    }
    RatK E = RatK::zero(F);
    for (int j = 0; j <= i; ++j) E += alpha[j] * RatK::theta_pow(F, (long)i * ipow_sat(q, j));
    // sum_b (x - b)^{-n} = (-1)^{n-1} [h^{n-1}] alpha_0 / (e_i(x) + e_i(h)) at x = theta^i
    int N = n - 1;
    std::vector<RatK> u(N + 1, RatK::zero(F));
    for (int j = 0; j <= i && ipow_sat(q, j) <= N; ++j) u[ipow_sat(q, j)] = alpha[j];
    std::vector<RatK> up(N + 1, RatK::zero(F));
    up[0] = RatK::one(F);
    RatK Einv = E.inv(), Ek = Einv, acc = RatK::zero(F);
    for (int k = 0; k <= N; ++k) {
        RatK term = up[N] * Ek;
        acc += (k % 2) ? -term : term;
        std::vector<RatK> nx(N + 1, RatK::zero(F));
        for (int a = 0; a <= N; ++a)
            if (!up[a].is_zero())
                for (int b = 1; a + b <= N; ++b)
                    if (!u[b].is_zero()) nx[a + b] += up[a] * u[b];
        up = std::move(nx);
        Ek *= Einv;
    }
    RatK S = alpha[0] * acc;
    return (N % 2) ? -S : S;
}

long power_sum_bound(int q, int i, int n) {
    // terms alpha_0 alpha_{j_1}..alpha_{j_k} / E^{k+1}, sum q^{j_l} = n - 1; each weight is
    // nonincreasing in i
    int N = n - 1;
    auto w = [&](int j) {
        long qj = ipow_sat(q, j);
        return -sat_add(sat_mul(j, qj), sat_mul(qj, deg_l(q, std::max(0, i - j))));
    };
    std::vector<long> best(N + 1, LaurentVal::kFloor);
    best[0] = 0;
    for (int s = 1; s <= N; ++s)
        for (int j = 0; ipow_sat(q, j) <= s; ++j) {
            long prev = best[s - ipow_sat(q, j)];
            if (prev > LaurentVal::kFloor) best[s] = std::max(best[s], sat_add(prev, w(j)));
        }
    return sat_add(-deg_l(q, i), best[N]);
}

LaurentVal zeta_value(const Field& F, const Array& n, long n_digits) {
    int q = F.q;
    int r = (int)n.size();
    if (r == 0) return LaurentVal::one(F);
    for (int x : n)
        if (x < 1) throw DivergentSpec("zeta_A needs positive entries");
    long rest = 0;
    for (int p = 1; p < r; ++p) rest = sat_add(rest, power_sum_bound(q, r - 1 - p, n[p]));
    long v0 = sat_add(rest, power_sum_bound(q, r - 1, n[0]));
    long lo = v0 - n_digits + 1;
    int K = r;
    while (sat_add(power_sum_bound(q, K, n[0]), rest) >= lo) ++K;
    ClassicalSeq s(F);
    std::vector<LaurentVal> V(r + 1, LaurentVal(F));
    V[r] = LaurentVal::one(F);
    for (int i = 0; i < K; ++i)
        for (int p = 0; p < r; ++p) {
            // V[p+1] still holds the sums over indices below i
            LaurentVal S = LaurentVal::from_ratk(power_sum_exact(s, i, n[p]), lo);
            V[p] = (V[p] + S * V[p + 1]).truncated(lo);
        }
    return V[0].truncated(std::max(lo, sat_add(sat_add(power_sum_bound(q, K, n[0]), rest), 1)));
}

// ---------------------------------------------------------------- Theorem E, numerically

ThmENumeric theorem_E_numeric(const Field& F, int d, int k, int t_deg, long n_digits) {
    int q = F.q;
    if (d < 1 || k < 0) throw std::invalid_argument("need d >= 1 and k >= 0");
    long Qk = ipow_sat(q, k);
    const long guard = 8;
    ThmENumeric out;
    out.rhs = series_value(F, {0}, {(int)(d * Qk)}, n_digits + guard);
    // steps until the terms 1/l_j^{d q^k} fall below the target, then two more as a check
    int J = 0;
    while (sat_mul(d * Qk, deg_l(q, J)) <= n_digits + guard) ++J;
    int steps = k + J + 2;
    long Amax = ipow_sat(q, steps - 1);
    long Lgoal = -n_digits - guard;
    // polynomial factors raise the degree bound past t_deg
    std::vector<long> floor(t_deg + d * (k + 1) + 1);
    for (std::size_t n = 0; n < floor.size(); ++n) floor[n] = sat_add(Lgoal, -sat_mul(Amax, (long)n));
    int I0 = 1;
    while (sat_mul(Qk, ipow_sat(q, I0 + 1)) < n_digits + guard + 2 * Amax) ++I0;
    for (int I = I0; I <= I0 + 4; ++I) {
        TruncSeriesT f = h_power(F, k, d, t_deg, I, floor);
        long Qlo = Lgoal / Qk - 1;
        LaurentVal G = -(pi_product(F, Qlo).frob(k).inv());
        f = series_scale(f, G.pow(d));
        f = series_mul_poly(f, linear_power(LaurentVal::monomial(F, 1, Qk), d - 1));
        for (int j = 0; j < k; ++j) f = series_mul_poly(f, linear_power(LaurentVal::monomial(F, 1, ipow_sat(q, j)), d));
        LaurentVal lhs(F);
        for (int j = 0; j < steps; ++j) {
            LaurentVal a = LaurentVal::monomial(F, 1, ipow_sat(q, j));
            lhs += f.jet(a, d - 1);
            // the quotient of the top-down division does not depend on the jets
            for (int e = 0; e < d; ++e) f = divide_linear(f, a);
            for (int n = 0; n <= f.degree_bound(); ++n) f.c[n] = f.c[n].truncated(floor[n]);
        }
        out.lhs = lhs;
        out.steps = steps;
        out.factors = I;
        if (lhs.lo() <= 1 - n_digits) break;
    }
    // pi Omega(theta) = -1, which puts (-1)^d in front of the series
    out.digits = agree_digits(out.lhs, d % 2 ? -out.rhs : out.rhs);
    out.digits_unsigned = agree_digits(out.lhs, out.rhs);
    long certified = out.lhs.known_zero() ? 0 : out.lhs.top() - out.lhs.lo() + 1;
    if (certified < 10) throw PrecisionExhausted("fewer than 10 digits of delta_1 could be certified");
    return out;
}

// ---------------------------------------------------------------- stabilization and the sine

std::vector<long> limit_sine_degrees(CarlitzModel& cm, int j, int kfirst, int klast) {
    if (kfirst < j + 1) throw std::invalid_argument("need k > j");
    auto M = [&](int k) { return cm.Gamma_inv(k) * cm.Q(j) * cm.Gamma_tw(k - j, j); };
    std::vector<long> out;
    MatK prev = M(kfirst - 1);
    for (int k = kfirst; k <= klast; ++k) {
        MatK cur = M(k);
        long deg = kDegNegInf;
        for (int a = 0; a < cur.rows(); ++a)
            for (int b = 0; b < cur.cols(); ++b) {
                RatK x = cur(a, b) - prev(a, b);
                if (!x.is_zero()) deg = std::max(deg, x.num().deg() - x.den().deg());
            }
        out.push_back(deg);
        prev = std::move(cur);
    }
    return out;
}

Check limit_sine_stabilization(CarlitzModel& cm, int j, int kfirst, int klast) {
    Check c("limit-sine stabilization q=" + std::to_string(cm.q()) + " d=" + std::to_string(cm.dim()) +
            " j=" + std::to_string(j));
    auto degs = limit_sine_degrees(cm, j, kfirst, klast);
    std::ostringstream os;
    for (long x : degs) os << (x == kDegNegInf ? std::string("zero") : std::to_string(-x)) << " ";
    c.instances = (int)degs.size();
    for (std::size_t i = 1; i < degs.size(); ++i) {
        // valuations -deg strictly increase; an exact zero may only be followed by zeros
        bool ok = degs[i - 1] == kDegNegInf ? degs[i] == kDegNegInf : degs[i] < degs[i - 1];
        if (!ok) fail_once(c, "valuations " + os.str());
    }
    if (c.ok) c.witness = "valuations " + os.str();
    return c;
}

LaurentVal sine_composition(const Field& F, const LaurentVal& z, int k, long lo) {
    int q = F.q;
    ClassicalSeq s(F);
    LaurentVal w = z.truncated(lo);
    for (int i = 0; i < k; ++i) {
        LaurentVal wq = w.frob(1);
        // L_i = l_i^{1-q}; only digits down to lo - top(w^q) matter
        long need = sat_add(lo, -std::max(0L, wq.bound()));
        LaurentVal L = LaurentVal::from_ratk(s.l(i).pow(1 - q), need);
        w = (w - L * wq).truncated(lo);
    }
    return w;
}

LaurentVal sine_series(const Field& F, const LaurentVal& z, int k, long lo) {
    int q = F.q;
    ClassicalSeq s(F);
    LaurentVal sum(F);
    for (int i = 0; i <= k; ++i) {
        long qi = ipow_sat(q, i);
        LaurentVal zi = z.frob(i);
        // pi^{q^i - 1}/D_i has valuation (q^i - 1) q/(q-1) - i q^i
        long vc = (qi - 1) / (q - 1) * q - sat_mul(i, qi);
        long digits = std::max(1L, sat_add(vc, -sat_add(lo, -std::max(0L, zi.bound()))) + 4);
        LaurentVal c = pi_power(F, qi - 1, digits) * LaurentVal::from_ratk(s.D(i).inv(), sat_add(-sat_mul(i, qi), -digits));
        sum += c * zi;
    }
    return sum.truncated(lo);
}

// ---------------------------------------------------------------- reconstruction

Reconstruction rational_reconstruct(const LaurentVal& x, long margin) {
    const Field& F = x.field();
    if (x.known_zero()) {
        if (x.is_exact()) return {RatK::zero(F), 0};
        throw ReconstructionFailure("value not known to be nonzero");
    }
    PolyA p1 = PolyA::constant(F, 1), p2(F), q1(F), q2 = PolyA::constant(F, 1);
    LaurentVal y = x;
    for (int iter = 0; iter < 4096; ++iter) {
        if (!y.is_exact() && y.lo() > 0) throw ReconstructionFailure("precision ran out before a convergent fit");
        std::vector<elem> ac;
        for (long e = 0; e <= y.top(); ++e) ac.push_back(y.coeff(e));
        PolyA a(F, ac);
        PolyA p = a * p1 + p2, qq = a * q1 + q2;
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = qq;
        LaurentVal res = x * LaurentVal::exact(qq) - LaurentVal::exact(p);
        if (res.known_zero()) {
            long avail = res.is_exact() ? kCeil : x.top() + qq.deg() - res.lo() + 1;
            long need = std::max(0L, p.deg()) + qq.deg() + margin;
            if (avail < need) throw ReconstructionFailure("convergent fits but is not certified by the precision");
            return {RatK(p, qq), avail};
        }
        LaurentVal frac = y - LaurentVal::exact(a);
        if (frac.known_zero()) throw ReconstructionFailure("precision ran out before a convergent fit");
        y = frac.inv();
    }
    throw ReconstructionFailure("continued fraction too long");
}

CarlitzRatio carlitz_ratio_reconstruct(const Field& F, int k, long n_digits) {
    int q = F.q;
    long n = (long)k * (q - 1);
    auto ratio_at = [&](long N) {
        LaurentVal z = zeta_value(F, {(int)n}, N);
        LaurentVal p = pi_power(F, n, N + 4);
        return std::make_pair(z, z * p.inv());
    };
    CarlitzRatio out;
    auto [z1, r1] = ratio_at(n_digits);
    Reconstruction rec = rational_reconstruct(r1);
    out.ratio = rec.value;
    auto [z2, r2] = ratio_at(2 * n_digits);
    LaurentVal pi2 = pi_power(F, n, 2 * n_digits + 4);
    LaurentVal c = LaurentVal::from_ratk(rec.value, sat_add(z2.lo(), -pi2.top() - 8));
    out.digits = agree_digits(z2, c * pi2);
    try {
        out.stable = rational_reconstruct(r2).value == rec.value;
    } catch (const ReconstructionFailure&) {
        out.stable = false;
    }
    return out;
}

}  // namespace ffid
