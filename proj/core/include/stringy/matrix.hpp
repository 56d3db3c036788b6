#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stringy {

// Small dense matrix over an exact scalar type. Everything in this project is
// desk-scale (dimensions <= a few dozen), so the implementation favors
// exactness and clarity over performance.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& v : m.data_) v = -v;
        return m;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& f) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const T& f) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }
    void negate_col(std::size_t c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix sum: shape mismatch");
    Matrix<T> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

template <typename T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
    Matrix<T> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

// v^T * A * w
template <typename T>
T bilinear(const std::vector<T>& v, const Matrix<T>& a, const std::vector<T>& w) {
    if (v.size() != a.rows() || w.size() != a.cols())
        throw std::invalid_argument("bilinear: shape mismatch");
    T acc(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == T(0)) continue;
        T row(0);
        for (std::size_t j = 0; j < w.size(); ++j) row += a(i, j) * w[j];
        acc += v[i] * row;
    }
    return acc;
}

template <typename T>
std::vector<T> apply(const Matrix<T>& a, const std::vector<T>& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("apply: shape mismatch");
    std::vector<T> r(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

// Gaussian elimination over a field (exact division required).
template <typename T>
std::size_t field_rank(Matrix<T> a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, col) == T(0)) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(rank, pivot);
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (a(r, col) == T(0)) continue;
            T f = a(r, col) / a(rank, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <typename T>
T field_determinant(Matrix<T> a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: not square");
    T det(1);
    for (std::size_t col = 0; col < a.cols(); ++col) {
        std::size_t pivot = col;
        while (pivot < a.rows() && a(pivot, col) == T(0)) ++pivot;
        if (pivot == a.rows()) return T(0);
        if (pivot != col) {
            a.swap_rows(col, pivot);
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < a.rows(); ++r) {
            if (a(r, col) == T(0)) continue;
            T f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

// Pfaffian of an antisymmetric matrix by expansion along the first row.
// Sizes here never exceed ~12x12, where the (2k-1)!! term count is harmless.
template <typename T>
T pfaffian(const Matrix<T>& a) {
    if (!a.is_square() || a.rows() % 2 != 0)
        throw std::invalid_argument("pfaffian: need an even-dimensional square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    if (n == 2) return a(0, 1);
    T acc(0);
    T sign(1);
    for (std::size_t j = 1; j < n; ++j) {
        if (!(a(0, j) == T(0))) {
            Matrix<T> sub(n - 2, n - 2);
            std::size_t ri = 0;
            for (std::size_t r = 1; r < n; ++r) {
                if (r == j) continue;
                std::size_t ci = 0;
                for (std::size_t c = 1; c < n; ++c) {
                    if (c == j) continue;
                    sub(ri, ci) = a(r, c);
                    ++ci;
                }
                ++ri;
            }
            acc += sign * a(0, j) * pfaffian(sub);
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace stringy
