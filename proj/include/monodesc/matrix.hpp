#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "monodesc/errors.hpp"

namespace monodesc {

// Dense row-major matrix over any ring T with value-initialized zero.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw ContractViolation("negative matrix shape");
    }

    static Mat identity(int n, const T& one) {
        Mat m(n, n);
        for (int k = 0; k < n; ++k) m(k, k) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    Mat& operator+=(const Mat& o) {
        require_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        require_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ContractViolation("matrix product shape mismatch");
        Mat out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Mat operator*(const T& s, const Mat& m) {
        Mat out(m.rows_, m.cols_);
        for (size_t k = 0; k < m.e_.size(); ++k) out.e_[k] = s * m.e_[k];
        return out;
    }

    Mat operator-() const {
        Mat out(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        Mat out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    template <class F>
    auto map(F f) const -> Mat<decltype(f(std::declval<const T&>()))> {
        Mat<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> e_;
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix shape mismatch");
    }
};

// Exact Gauss-Jordan inverse over a field T (needs is_zero(T) and division).
// Throws SingularGauge when no inverse exists.
template <class T>
Mat<T> exact_inverse(Mat<T> a, const T& one) {
    if (!a.is_square()) throw ContractViolation("inverse of non-square matrix");
    int n = a.rows();
    Mat<T> inv = Mat<T>::identity(n, one);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(a(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularGauge("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        T d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / d;
            inv(col, j) = inv(col, j) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || is_zero(a(r, col))) continue;
            T f = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

template <class T>
T exact_det(Mat<T> a, const T& one) {
    if (!a.is_square()) throw ContractViolation("determinant of non-square matrix");
    int n = a.rows();
    T det = one;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(a(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) return T();  // zero
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det = det * a(col, col);
        T d = a(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (is_zero(a(r, col))) continue;
            T f = a(r, col) / d;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

using CMat = Mat<std::complex<double>>;

inline CMat cmat_identity(int n) { return CMat::identity(n, std::complex<double>(1.0, 0.0)); }

inline CMat conj(const CMat& m) {
    return m.map([](const std::complex<double>& v) { return std::conj(v); });
}

inline double inf_norm(const CMat& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
    return best;
}

inline double max_dev(const CMat& a, const CMat& b) { return inf_norm(a - b); }

}  // namespace monodesc
