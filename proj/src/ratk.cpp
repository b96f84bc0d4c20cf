#include "ffid/ratk.hpp"

namespace ffid {

RatK::RatK(const PolyA& n) : n_(n) {
    if (n.field()) d_ = PolyA::constant(*n.field(), 1);
}

RatK::RatK(PolyA n, PolyA d) : n_(std::move(n)), d_(std::move(d)) {
    if (d_.is_zero()) throw PoleAtEvaluation("zero denominator in F_q(theta)");
    normalize();
}

RatK RatK::theta_qk(const Field& F, int k) {
    long m = 1;
    for (int i = 0; i < k; ++i) m *= F.q;
    return theta_pow(F, m);
}

void RatK::normalize() {
    const Field& F = *d_.field();
    if (n_.is_zero()) {
        n_ = PolyA(F);
        d_ = PolyA::constant(F, 1);
        return;
    }
    if (!d_.is_constant()) {
        PolyA g = PolyA::gcd(n_, d_);
        if (!g.is_one()) {
            n_ = n_ / g;
            d_ = d_ / g;
        }
    }
    if (d_.lead() != 1) {
        elem li = F.inv(d_.lead());
        n_ = n_.scaled(li);
        d_ = d_.scaled(li);
    }
}

RatK RatK::operator+(const RatK& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (d_ == o.d_) {
        if (d_.is_one()) return RatK(n_ + o.n_);
        return RatK(n_ + o.n_, d_);
    }
    if (d_.is_one()) return RatK(n_ * o.d_ + o.n_, o.d_, NoReduce{});
    if (o.d_.is_one()) return RatK(n_ + o.n_ * d_, d_, NoReduce{});
    PolyA g = PolyA::gcd(d_, o.d_);
    if (g.is_one()) return RatK(n_ * o.d_ + o.n_ * d_, d_ * o.d_, NoReduce{});
    PolyA a = d_ / g, b = o.d_ / g;
    PolyA num = n_ * b + o.n_ * a;
    if (num.is_zero()) return RatK::zero(*n_.field());
    PolyA g2 = PolyA::gcd(num, g);
    if (!g2.is_one()) return RatK(num / g2, a * (o.d_ / g2), NoReduce{});
    return RatK(std::move(num), a * o.d_, NoReduce{});
}

RatK RatK::operator-() const { return RatK(-n_, d_, NoReduce{}); }

RatK RatK::operator-(const RatK& o) const { return *this + (-o); }

RatK RatK::operator*(const RatK& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    PolyA n1 = n_, n2 = o.n_, d1 = d_, d2 = o.d_;
    if (!d2.is_one() && !n1.is_constant()) {
        PolyA g = PolyA::gcd(n1, d2);
        if (!g.is_one()) { n1 = n1 / g; d2 = d2 / g; }
    }
    if (!d1.is_one() && !n2.is_constant()) {
        PolyA g = PolyA::gcd(n2, d1);
        if (!g.is_one()) { n2 = n2 / g; d1 = d1 / g; }
    }
    return RatK(n1 * n2, d1 * d2, NoReduce{});
}

RatK RatK::inv() const {
    if (is_zero()) throw PoleAtEvaluation("inverse of zero in F_q(theta)");
    const Field& F = *n_.field();
    elem li = F.inv(n_.lead());
    return RatK(d_.scaled(li), n_.scaled(li), NoReduce{});
}

RatK RatK::operator/(const RatK& o) const { return *this * o.inv(); }

RatK RatK::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    if (n == 0) {
        const Field* F = field();
        return RatK::one(F ? *F : Field::get(2));
    }
    if (is_zero()) return *this;
    return RatK(n_.pow(n), d_.pow(n), NoReduce{});
}

RatK RatK::twist(int k) const {
    if (k == 0 || is_zero()) return *this;
    return RatK(n_.twist(k), d_.twist(k), NoReduce{});
}

RatK RatK::scaled(elem a) const {
    if (a == 0) return RatK::zero(*field());
    return RatK(n_.scaled(a), d_, NoReduce{});
}

bool RatK::operator<(const RatK& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (is_zero()) return false;
    return d_ < o.d_;
}

long RatK::degree() const {
    if (is_zero()) return kDegNegInf;
    return n_.deg() - d_.deg();
}

std::string RatK::str() const {
    if (is_zero()) return "0";
    auto wrap = [](const PolyA& p) {
        std::string s = p.str();
        return s.find('+') == std::string::npos ? s : "(" + s + ")";
    };
    if (d_.is_one()) return n_.str();
    return wrap(n_) + "/" + wrap(d_);
}

}  // namespace ffid
