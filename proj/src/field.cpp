#include "ffid/field.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace ffid {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Conway polynomials, coefficients low degree first
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> t = {
        {{2, 2}, {1, 1, 1}},   {{2, 3}, {1, 1, 0, 1}}, {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}}, {{5, 2}, {2, 4, 1}},   {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},   {{11, 2}, {2, 7, 1}},  {{13, 2}, {2, 12, 1}},
    };
    return t;
}

// a polynomial of degree 2 or 3 over F_p is irreducible iff it has no root
bool has_root(const std::vector<int>& f, int p) {
    for (int x = 0; x < p; ++x) {
        long long v = 0;
        for (int i = (int)f.size() - 1; i >= 0; --i) v = (v * x + f[i]) % p;
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

Field::Field(int q_) : q(q_) {
    if (q < 2 || q > 256) throw FieldError("unsupported field size q=" + std::to_string(q_) + " (need 2 <= q <= 256)");
    int pp = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) { pp = d; break; }
    int ee = 0, t = q;
    while (t % pp == 0) { t /= pp; ++ee; }
    if (t != 1 || !is_prime(pp)) throw FieldError("q=" + std::to_string(q_) + " is not a prime power");
    if (ee > 3) throw FieldError("extension degree " + std::to_string(ee) + " > 3 is not supported");
    p = pp;
    e = ee;
    if (e > 1) {
        auto it = conway_table().find({p, e});
        if (it == conway_table().end()) throw FieldError("no modulus on record for q=" + std::to_string(q));
        modulus = it->second;
        if (has_root(modulus, p)) throw FieldError("modulus for q=" + std::to_string(q) + " is reducible");
    }
    if (q == 2) kind = Kind::Binary;
    else if (p == 2) kind = Kind::Char2Ext;
    else if (e == 1) kind = Kind::SmallPrime;
    else kind = Kind::Generic;

    auto digits = [&](int a) {
        std::array<int, 3> d{0, 0, 0};
        for (int i = 0; i < e; ++i) { d[i] = a % p; a /= p; }
        return d;
    };
    auto undigits = [&](const std::array<int, 3>& d) {
        int a = 0;
        for (int i = e - 1; i >= 0; --i) a = a * p + d[i];
        return a;
    };
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        std::array<int, 3> dn{};
        for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = (elem)undigits(dn);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            std::array<int, 3> s{};
            for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
            add_[a * q + b] = (elem)undigits(s);
            std::array<int, 6> pr{};
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) pr[i + j] = (pr[i + j] + da[i] * db[j]) % p;
            for (int k = 2 * e - 2; k >= e; --k) {
                int c = pr[k];
                if (!c) continue;
                for (int i = 0; i <= e; ++i) pr[k - e + i] = ((pr[k - e + i] - c * modulus[i]) % p + p) % p;
            }
            std::array<int, 3> r{};
            for (int i = 0; i < e; ++i) r[i] = pr[i];
            mul_[a * q + b] = (elem)undigits(r);
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) { inv_[a] = (elem)b; break; }
}

const Field& Field::get(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> reg;
    std::lock_guard<std::mutex> lk(mu);
    auto it = reg.find(q);
    if (it != reg.end()) return *it->second;
    auto f = std::unique_ptr<Field>(new Field(q));
    auto& ref = *f;
    reg.emplace(q, std::move(f));
    return ref;
}

elem Field::pow(elem a, long long n) const {
    if (n < 0) { a = inv(a); n = -n; }
    elem r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

elem Field::from_int(long long n) const {
    long long r = n % p;
    if (r < 0) r += p;
    return (elem)r;
}

namespace {

template <int E>
void axpy_char2(elem* __restrict r, const elem* __restrict b, std::size_t n, const elem* col) {
    for (std::size_t i = 0; i < n; ++i) {
        elem x = b[i], m = 0;
        for (int j = 0; j < E; ++j) m ^= (elem)(-(elem)((x >> j) & 1)) & col[j];
        r[i] ^= m;
    }
}

void axpy_prime(elem* __restrict r, const elem* __restrict b, std::size_t n, elem c, int p) {
    int top = 0;
    while ((p << (top + 1)) < p * p) ++top;
    const std::uint16_t cc = c, pp = (std::uint16_t)p;
    if (p == 3) {
        // c = 2 acts as subtraction: r - b = r + 3 - b
        if (c == 1) {
            for (std::size_t i = 0; i < n; ++i) {
                elem v = (elem)(r[i] + b[i]);
                r[i] = (elem)(v >= 3 ? v - 3 : v);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                elem v = (elem)(r[i] + 3 - b[i]);
                r[i] = (elem)(v >= 3 ? v - 3 : v);
            }
        }
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::uint16_t v = (std::uint16_t)(r[i] + cc * b[i]);
        for (int s = top; s >= 0; --s) {
            std::uint16_t m = (std::uint16_t)(pp << s);
            v = (std::uint16_t)(v - (v >= m ? m : 0));
        }
        r[i] = (elem)v;
    }
}

}  // namespace

void Field::axpy(elem* r, const elem* b, std::size_t n, elem c) const {
    if (c == 0 || n == 0) return;
    switch (kind) {
        case Kind::Binary:
            for (std::size_t i = 0; i < n; ++i) r[i] ^= b[i];
            return;
        case Kind::Char2Ext: {
            elem col[3] = {0, 0, 0};
            for (int j = 0; j < e; ++j) col[j] = mul(c, (elem)(1 << j));
            if (e == 2) axpy_char2<2>(r, b, n, col);
            else axpy_char2<3>(r, b, n, col);
            return;
        }
        case Kind::SmallPrime:
            axpy_prime(r, b, n, c, p);
            return;
        case Kind::Generic: {
            const elem* row = &mul_[c * q];
            for (std::size_t i = 0; i < n; ++i) r[i] = add_[r[i] * q + row[b[i]]];
            return;
        }
    }
}

void Field::scale(elem* r, const elem* b, std::size_t n, elem c) const {
    const elem* row = &mul_[c * q];
    for (std::size_t i = 0; i < n; ++i) r[i] = row[b[i]];
}

std::string Field::elem_str(elem a) const {
    if (e == 1) return std::to_string(a);
    std::string s;
    int d[3] = {0, 0, 0}, x = a;
    for (int i = 0; i < e; ++i) { d[i] = x % p; x /= p; }
    for (int i = e - 1; i >= 0; --i) {
        if (!d[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0) { s += std::to_string(d[i]); continue; }
        if (d[i] != 1) s += std::to_string(d[i]) + "*";
        s += i == 1 ? "w" : "w^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

int binom_mod(long long n, long long k, int p) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    while (n || k) {
        long long a = n % p, b = k % p;
        if (b > a) return 0;
        long long num = 1, den = 1;
        for (long long i = 0; i < b; ++i) {
            num = num * ((a - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        long long dinv = 1, base = den, ex = p - 2;
        while (ex) {
            if (ex & 1) dinv = dinv * base % p;
            base = base * base % p;
            ex >>= 1;
        }
        r = r * num % p * dinv % p;
        n /= p;
        k /= p;
    }
    return (int)r;
}

int gbinom_mod(long long n, long long k, int p) {
    if (k < 0) return 0;
    if (n >= 0) return binom_mod(n, k, p);
    // C(n, k) = (-1)^k C(k - n - 1, k)
    int v = binom_mod(k - n - 1, k, p);
    if (k % 2) v = (p - v) % p;
    return v;
}

}  // namespace ffid
