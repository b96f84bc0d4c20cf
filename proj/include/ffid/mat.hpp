#pragma once
// Dense rectangular matrices over a commutative ring T.
// T{} must be the zero element; the identity needs an explicit one.

#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ffid {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_((std::size_t)rows * cols) {}
    Mat(int rows, int cols, const T& fill) : r_(rows), c_(cols), a_((std::size_t)rows * cols, fill) {}

    static Mat identity(int n, const T& one) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    // column vector
    static Mat column(const std::vector<T>& v) {
        Mat m((int)v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m.a_[i] = v[i];
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[(std::size_t)i * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[(std::size_t)i * c_ + j]; }

    Mat operator+(const Mat& o) const {
        check_same(o);
        Mat m(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
        return m;
    }
    Mat operator-(const Mat& o) const {
        check_same(o);
        Mat m(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
        return m;
    }
    Mat operator-() const {
        Mat m(*this);
        for (auto& x : m.a_) x = -x;
        return m;
    }
    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw DimensionMismatch("matrix product of incompatible shapes");
        Mat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < o.c_; ++j) {
                T s{};
                bool first = true;
                for (int k = 0; k < c_; ++k) {
                    const T& x = (*this)(i, k);
                    const T& y = o(k, j);
                    if (x.is_zero() || y.is_zero()) continue;
                    if (first) { s = x * y; first = false; }
                    else s = s + x * y;
                }
                m(i, j) = s;
            }
        return m;
    }
    Mat scaled(const T& s) const {
        Mat m(*this);
        for (auto& x : m.a_) x = s * x;
        return m;
    }
    Mat& operator+=(const Mat& o) { return *this = *this + o; }
    Mat& operator-=(const Mat& o) { return *this = *this - o; }

    bool operator==(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    // reflection across the anti-diagonal: M^perp[i][j] = M[s-1-j][d-1-i] (0-based, M is d x s)
    Mat anti_transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < c_; ++i)
            for (int j = 0; j < r_; ++j) m(i, j) = (*this)(r_ - 1 - j, c_ - 1 - i);
        return m;
    }
    template <class F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        Mat<U> m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }
    // first position where two matrices differ, or (-1,-1)
    std::pair<int, int> first_difference(const Mat& o) const {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!((*this)(i, j) == o(i, j))) return {i, j};
        return {-1, -1};
    }
    const std::vector<T>& data() const { return a_; }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
    void check_same(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix sum of different shapes");
    }
};

}  // namespace ffid
