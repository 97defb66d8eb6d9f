#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dycknet/errors.hpp"

namespace dycknet {

// Dense rectangular matrix over an exact or big-float scalar type. Shapes are
// fixed at construction; mismatched operands throw DimensionError. Nothing
// here is tuned for speed: instances stay small (a few hundred square at
// most) and exactness is what matters.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix with zero dimension");
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty() || rows[0].empty()) throw DimensionError("matrix with zero dimension");
        Matrix m(rows.size(), rows[0].size(), rows[0][0]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t r, std::size_t c) {
        check(r, c);
        return d_[r * cols_ + c];
    }
    const T& at(std::size_t r, std::size_t c) const {
        check(r, c);
        return d_[r * cols_ + c];
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_, d_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matmul shape mismatch");
        Matrix r(a.rows_, b.cols_, zero_like(a.d_[0]));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw DimensionError("matvec shape mismatch");
        std::vector<T> r(a.rows_, zero_like(a.d_[0]));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] = r[i] + a.at(i, j) * v[j];
        return r;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    }

    std::size_t rows_, cols_;
    std::vector<T> d_;
};

// Gaussian elimination with partial pivoting (largest |pivot|; any nonzero
// pivot is exact for Rational entries).
template <class T>
T det(Matrix<T> a) {
    if (a.rows() != a.cols()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    T result = one_like(a.at(0, 0));
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (cmp_abs(a.at(r, col), a.at(piv, col)) > 0) piv = r;
        if (a.at(piv, col).is_zero()) return zero_like(result);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            negate = !negate;
        }
        result = result * a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const T f = a.at(r, col) / a.at(col, col);
            for (std::size_t c = col; c < n; ++c)
                a.at(r, c) = a.at(r, c) - f * a.at(col, c);
        }
    }
    return negate ? -result : result;
}

// Solves A X = B. Throws SingularMatrixError (with the determinant found so
// far, i.e. zero) when elimination hits an all-zero pivot column.
template <class T>
Matrix<T> linear_solve(Matrix<T> a, Matrix<T> b) {
    if (a.rows() != a.cols()) throw DimensionError("linear_solve needs a square matrix");
    if (b.rows() != a.rows()) throw DimensionError("linear_solve shape mismatch");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (cmp_abs(a.at(r, col), a.at(piv, col)) > 0) piv = r;
        if (a.at(piv, col).is_zero()) throw SingularMatrixError("0");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            for (std::size_t c = 0; c < m; ++c) std::swap(b.at(piv, c), b.at(col, c));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const T f = a.at(r, col) / a.at(col, col);
            if (f.is_zero()) continue;
            for (std::size_t c = col; c < n; ++c)
                a.at(r, c) = a.at(r, c) - f * a.at(col, c);
            for (std::size_t c = 0; c < m; ++c)
                b.at(r, c) = b.at(r, c) - f * b.at(col, c);
        }
    }
    Matrix<T> x(n, m, zero_like(a.at(0, 0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c) x.at(r, c) = b.at(r, c) / a.at(r, r);
    return x;
}

template <class T>
Matrix<T> mat_inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> id(n, n, zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = one_like(a.at(0, 0));
    return linear_solve(a, id);
}

template <class T>
Matrix<T> identity_like(std::size_t n, const T& exemplar) {
    Matrix<T> id(n, n, zero_like(exemplar));
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = one_like(exemplar);
    return id;
}

} // namespace dycknet
