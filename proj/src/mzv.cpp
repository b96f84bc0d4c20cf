#include "ffid/mzv.hpp"

#include <numeric>
#include <sstream>

namespace ffid {

int weight(const Array& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::string array_str(const Array& a) {
    std::ostringstream o;
    o << "(";
    for (std::size_t i = 0; i < a.size(); ++i) o << (i ? "," : "") << a[i];
    o << ")";
    return o.str();
}

bool is_nd(const Array& a, int q) {
    for (int n : a)
        if (n % q == 0) return false;
    return true;
}

ArrayComb ArrayComb::of(const Field& F, const Array& a) { return of(F, a, RatK::one(F)); }

ArrayComb ArrayComb::of(const Field& F, const Array& a, const RatK& c) {
    for (int n : a)
        if (n <= 0) throw std::invalid_argument("array entries must be positive");
    ArrayComb r(F);
    r.add(a, c);
    return r;
}

RatK ArrayComb::coeff(const Array& a) const {
    auto it = t_.find(a);
    return it == t_.end() ? RatK::zero(*F_) : it->second;
}

void ArrayComb::add(const Array& a, const RatK& c) {
    if (c.is_zero()) return;
    auto it = t_.find(a);
    if (it == t_.end()) {
        t_.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

ArrayComb ArrayComb::operator+(const ArrayComb& o) const {
    ArrayComb r(*this);
    for (auto& [a, c] : o.t_) r.add(a, c);
    return r;
}

ArrayComb ArrayComb::operator-(const ArrayComb& o) const { return *this + o.scaled(-RatK::one(*F_)); }

ArrayComb ArrayComb::scaled(const RatK& s) const {
    ArrayComb r(*F_);
    if (s.is_zero()) return r;
    for (auto& [a, c] : t_) r.t_.emplace(a, c * s);
    return r;
}

std::string ArrayComb::str() const {
    if (t_.empty()) return "0";
    std::ostringstream o;
    bool first = true;
    for (auto& [a, c] : t_) {
        if (!first) o << " + ";
        first = false;
        if (!c.is_one()) o << "(" << c.str() << ")";
        o << array_str(a);
    }
    return o.str();
}

namespace {

using Counts = std::map<Array, long long>;

// stuffle of two arrays with integer multiplicities reduced mod p
Counts stuffle_arrays(const Array& a, const Array& b, int p) {
    std::size_t na = a.size(), nb = b.size();
    // T[i][j] = stuffle of the suffixes a[i..], b[j..]
    std::vector<std::vector<Counts>> T(na + 1, std::vector<Counts>(nb + 1));
    for (std::size_t i = na + 1; i-- > 0;) {
        for (std::size_t j = nb + 1; j-- > 0;) {
            Counts& out = T[i][j];
            if (i == na) {
                out[Array(b.begin() + j, b.end())] = 1;
                continue;
            }
            if (j == nb) {
                out[Array(a.begin() + i, a.end())] = 1;
                continue;
            }
            auto put = [&](int head, const Counts& tail) {
                for (auto& [arr, c] : tail) {
                    Array x;
                    x.reserve(arr.size() + 1);
                    x.push_back(head);
                    x.insert(x.end(), arr.begin(), arr.end());
                    long long& slot = out[x];
                    slot = (slot + c) % p;
                }
            };
            put(a[i], T[i + 1][j]);
            put(b[j], T[i][j + 1]);
            put(a[i] + b[j], T[i + 1][j + 1]);
        }
    }
    return T[0][0];
}

template <class F>
ArrayComb bilinear(const ArrayComb& x, const ArrayComb& y, F&& on_arrays) {
    const Field& fld = x.field();
    ArrayComb r(fld);
    for (auto& [a, ca] : x.terms())
        for (auto& [b, cb] : y.terms()) {
            RatK c = ca * cb;
            for (auto& [arr, n] : on_arrays(a, b)) {
                if (n % fld.p == 0) continue;
                r.add(arr, c.scaled(fld.from_int(n)));
            }
        }
    return r;
}

}  // namespace

ArrayComb concat(const ArrayComb& x, const ArrayComb& y) {
    return bilinear(x, y, [](const Array& a, const Array& b) {
        Array c(a);
        c.insert(c.end(), b.begin(), b.end());
        return Counts{{c, 1}};
    });
}

ArrayComb stuffle(const ArrayComb& x, const ArrayComb& y) {
    int p = x.field().p;
    return bilinear(x, y, [p](const Array& a, const Array& b) { return stuffle_arrays(a, b, p); });
}

ArrayComb diamond(const ArrayComb& x, const ArrayComb& y) {
    int p = x.field().p;
    return bilinear(x, y, [p](const Array& a, const Array& b) {
        if (a.empty()) return Counts{{b, 1}};
        if (b.empty()) return Counts{{a, 1}};
        Counts out;
        for (auto& [arr, c] : stuffle_arrays(Array(a.begin() + 1, a.end()), Array(b.begin() + 1, b.end()), p)) {
            Array x{a[0] + b[0]};
            x.insert(x.end(), arr.begin(), arr.end());
            out[x] = c;
        }
        return out;
    });
}

ArrayComb triangle(const ArrayComb& x, const ArrayComb& y) {
    int p = x.field().p;
    return bilinear(x, y, [p](const Array& a, const Array& b) {
        Counts out;
        if (a.empty()) return out;
        for (auto& [arr, c] : stuffle_arrays(Array(a.begin() + 1, a.end()), b, p)) {
            Array z{a[0]};
            z.insert(z.end(), arr.begin(), arr.end());
            out[z] = c;
        }
        return out;
    });
}

ArrayComb stuffle_pow(const ArrayComb& a, int k) {
    if (k < 0) throw std::invalid_argument("negative stuffle power");
    ArrayComb r = ArrayComb::unit(a.field()), b = a;
    while (k > 0) {
        if (k & 1) r = stuffle(r, b);
        k >>= 1;
        if (k) b = stuffle(b, b);
    }
    return r;
}

ArrayComb stuffle_frobenius(const ArrayComb& a, int j) {
    long s = 1;
    for (int i = 0; i < j; ++i) s *= a.field().q;
    ArrayComb r(a.field());
    for (auto& [arr, c] : a.terms()) {
        Array x(arr);
        for (int& n : x) n = (int)(n * s);
        r.add(x, c.twist(j));
    }
    return r;
}

LSums::LSums(const Field& F) : F_(&F) {}

const PolyA& LSums::l(int i) {
    while ((int)l_.size() <= i) {
        int k = (int)l_.size();
        if (k == 0) {
            l_.push_back(PolyA::constant(*F_, 1));
        } else {
            l_.push_back(l_.back() * r(k));
        }
    }
    return l_[i];
}

// r_i = l_i / l_{i-1} = theta - theta^{q^i}, with r_0 = 1
const PolyA& LSums::r(int i) {
    while ((int)r_.size() <= i) {
        int k = (int)r_.size();
        if (k == 0)
            r_.push_back(PolyA::constant(*F_, 1));
        else
            r_.push_back(PolyA::theta(*F_) - PolyA::theta(*F_).twist(k));
    }
    return r_[i];
}

void LSums::run(int i, const std::map<Array, PolyA>& x, int w, PolyA& lt_num, PolyA& at_num) {
    struct Node {
        int w;
        PolyA v;
        std::vector<std::pair<int, Array>> kids;  // (first entry, child prefix)
    };
    std::map<Array, Node> nodes;
    for (auto& [a, c] : x) {
        for (std::size_t s = 0; s <= a.size(); ++s) {
            Array pre(a.begin(), a.begin() + s);
            auto [it, fresh] = nodes.try_emplace(pre, Node{w - weight(pre), PolyA(*F_), {}});
            if (fresh && s > 0) nodes[Array(a.begin(), a.begin() + s - 1)].kids.push_back({a[s - 1], pre});
            if (s == a.size()) it->second.v += c;
        }
    }
    // V(0): leaves carry their coefficient, everything of positive weight is zero
    std::map<std::pair<int, int>, PolyA> rp;
    auto rpow = [&](int k, int e) -> const PolyA& {
        auto it = rp.find({k, e});
        if (it == rp.end()) it = rp.emplace(std::make_pair(k, e), r(k).pow(e)).first;
        return it->second;
    };
    auto at_of = [&](const Node& n, int k) {
        PolyA s(*F_);
        for (auto& [h, kid] : n.kids) s += nodes.at(kid).v * rpow(k, n.w - h);
        return s;
    };
    for (int k = 0; k < i; ++k) {
        std::map<Array, PolyA> next;
        for (auto& [pre, n] : nodes) {
            if (n.w == 0) continue;
            next[pre] = n.v * rpow(k, n.w) + at_of(n, k);
        }
        for (auto& [pre, v] : next) nodes[pre].v = std::move(v);
    }
    const Node& root = nodes.at(Array{});
    lt_num = root.v;
    at_num = w == 0 ? root.v : at_of(root, i);
}

namespace {

// clears denominators: returns D and the polynomial coefficients of D * x, grouped by weight
PolyA clear_and_group(const ArrayComb& x, std::map<int, std::map<Array, PolyA>>& by_w) {
    const Field& F = x.field();
    PolyA D = PolyA::constant(F, 1);
    for (auto& [a, c] : x.terms())
        if (!c.is_poly()) D = D * (c.den() / PolyA::gcd(D, c.den()));
    for (auto& [a, c] : x.terms()) {
        PolyA v = c.num() * (D / c.den());
        by_w[weight(a)][a] = v;
    }
    return D;
}

}  // namespace

Frac LSums::lt_frac(int i, const ArrayComb& x) {
    if (x.field().q != F_->q) throw std::invalid_argument("array combination over another field");
    std::map<int, std::map<Array, PolyA>> by_w;
    PolyA D = clear_and_group(x, by_w);
    if (by_w.empty()) return {PolyA(*F_), PolyA::constant(*F_, 1)};
    if (i < 0) {
        auto it = by_w.find(0);
        if (it == by_w.end()) return {PolyA(*F_), PolyA::constant(*F_, 1)};
        return {it->second.begin()->second, D};
    }
    const PolyA& base = i == 0 ? PolyA::constant(*F_, 1) : l(i - 1);
    int W = by_w.rbegin()->first;
    PolyA num(*F_);
    for (auto& [w, terms] : by_w) {
        PolyA lt_n, at_n;
        run(i, terms, w, lt_n, at_n);
        num += lt_n * base.pow(W - w);
    }
    return {num, base.pow(W) * D};
}

Frac LSums::at_frac(int i, const ArrayComb& x) {
    if (x.field().q != F_->q) throw std::invalid_argument("array combination over another field");
    std::map<int, std::map<Array, PolyA>> by_w;
    PolyA D = clear_and_group(x, by_w);
    if (by_w.empty() || i < 0) return {PolyA(*F_), PolyA::constant(*F_, 1)};
    const PolyA& base = l(i);
    int W = by_w.rbegin()->first;
    PolyA num(*F_);
    for (auto& [w, terms] : by_w) {
        PolyA lt_n, at_n;
        run(i, terms, w, lt_n, at_n);
        num += at_n * base.pow(W - w);
    }
    return {num, base.pow(W) * D};
}

Frac LSums::polylog_lt(int k, const std::vector<int>& mrow, const std::vector<int>& nrow) {
    if (mrow.size() != nrow.size()) throw std::invalid_argument("polylogarithm rows of different lengths");
    int depth = (int)nrow.size();
    std::vector<int> w(depth + 1, 0);
    for (int j = depth - 1; j >= 0; --j) w[j] = w[j + 1] + nrow[j];
    // V[j]: numerator over l_{i-1}^{w_j} of the sum over the last depth - j indices, all below i
    std::vector<PolyA> V(depth + 1, PolyA(*F_));
    V[depth] = PolyA::constant(*F_, 1);
    long qi = 1;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < depth; ++j) {
            PolyA head = (V[j + 1] * r(i).pow(w[j] - nrow[j])).shifted((long)mrow[j] * qi);
            V[j] = V[j] * r(i).pow(w[j]) + head;
        }
        qi *= F_->q;
    }
    if (k <= 0) return {PolyA(*F_), PolyA::constant(*F_, 1)};
    return {V[0], l(k - 1).pow(w[0])};
}

PowerSums::PowerSums(const Field& F, std::uint64_t budget) : F_(&F), budget_(budget) {}

RatK PowerSums::single(int i, int n) {
    if (i < 0) return RatK::zero(*F_);
    auto key = std::make_pair(i, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::uint64_t count = 1;
    for (int k = 0; k < i; ++k) {
        count *= (std::uint64_t)F_->q;
        if (count > budget_)
            throw EnumerationBudgetExceeded("monic polynomials of degree " + std::to_string(i) + " exceed the budget");
    }
    // lexicographic order on the non-leading coefficients
    RatK s = RatK::zero(*F_);
    std::vector<elem> c(i + 1, 0);
    c[i] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (int k = 0; k < i; ++k) {
            c[k] = (elem)(v % F_->q);
            v /= F_->q;
        }
        s += RatK(PolyA::constant(*F_, 1), PolyA(*F_, c).pow(n));
    }
    cache_.emplace(key, s);
    return s;
}

RatK PowerSums::at(int i, const Array& a) {
    if (i < 0) return RatK::zero(*F_);
    if (a.empty()) return RatK::one(*F_);
    return single(i, a[0]) * lt(i, Array(a.begin() + 1, a.end()));
}

RatK PowerSums::lt(int i, const Array& a) {
    if (a.empty()) return RatK::one(*F_);
    RatK s = RatK::zero(*F_);
    for (int j = 0; j < i; ++j) s += at(j, a);
    return s;
}

RatK PowerSums::at(int i, const ArrayComb& x) {
    RatK s = RatK::zero(*F_);
    for (auto& [a, c] : x.terms()) s += c * at(i, a);
    return s;
}

RatK PowerSums::lt(int i, const ArrayComb& x) {
    RatK s = RatK::zero(*F_);
    for (auto& [a, c] : x.terms()) s += c * lt(i, a);
    return s;
}

}  // namespace ffid
