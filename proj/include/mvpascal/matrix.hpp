#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mvpascal/errors.hpp"
#include "mvpascal/numbers.hpp"
#include "mvpascal/poly.hpp"

namespace mvpascal {

/// Dense matrix over an exact coefficient ring (Int, Rat or Polynomial).
/// Dense storage is deliberate: index sets stay at desk scale and the
/// Pascal matrices fill half of every row anyway.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!(data_[i] == o.data_[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <class T>
Matrix<T> make_identity(std::size_t n) {
    Matrix<T> m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows() || a.cols() == 0)
        throw ShapeError("matrix product shapes do not conform");
    Matrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            r(i, j) = std::move(acc);
        }
    return r;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size() || a.cols() == 0)
        throw ShapeError("matrix-vector shapes do not conform");
    std::vector<T> r;
    r.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        T acc = a(i, 0) * v[0];
        for (std::size_t k = 1; k < a.cols(); ++k) acc += a(i, k) * v[k];
        r.push_back(std::move(acc));
    }
    return r;
}

template <class T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned e) {
    if (a.rows() != a.cols()) throw ShapeError("matrix power needs a square matrix");
    Matrix<T> r = make_identity<T>(a.rows());
    Matrix<T> base = a;
    while (e > 0) {
        if (e & 1u) r = mat_mul(r, base);
        e >>= 1u;
        if (e) base = mat_mul(base, base);
    }
    return r;
}

/// Product of the diagonal. Use only where triangularity is structural.
template <class T>
T det_triangular(const Matrix<T>& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw ShapeError("determinant needs a nonempty square matrix");
    T d = a(0, 0);
    for (std::size_t i = 1; i < a.rows(); ++i) d = d * a(i, i);
    return d;
}

/// Exact determinant by fraction-free elimination with row pivoting. Every
/// division in the Bareiss update divides evenly over the integers.
inline Int det_bareiss(Matrix<Int> m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw ShapeError("determinant needs a nonempty square matrix");
    const std::size_t n = m.rows();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    Int d = m(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

inline Matrix<Rat> to_rat(const Matrix<Int>& a) {
    Matrix<Rat> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

inline Matrix<Polynomial> to_poly(const Matrix<Int>& a, int nvars) {
    Matrix<Polynomial> r(a.rows(), a.cols(), Polynomial::zero(nvars));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = Polynomial::constant(nvars, Rat(a(i, j)));
    return r;
}

template <class T>
bool is_zero_matrix(const Matrix<T>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == T(0))) return false;
    return true;
}

}  // namespace mvpascal
