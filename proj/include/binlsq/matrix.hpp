// Dense real matrices and vectors, row-major, double precision.
//
// Deliberately small: only the operations the solvers need. Vectors are
// plain std::vector<double>; binary solution vectors are std::vector<int>
// restricted to 0/1 entries.
#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "binlsq/errors.hpp"

namespace binlsq {

using Vector = std::vector<double>;
using BinaryVector = std::vector<int>;  // entries are 0 or 1

class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    // Row-major entries; sizes must agree.
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw DimensionMismatch("matrix construction: " + std::to_string(entries_.size()) +
                                    " entries for a " + dims_string(rows_, cols_) + " matrix");
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        Matrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_) {
                throw DimensionMismatch("matrix construction: ragged row " + std::to_string(i + 1));
            }
            std::size_t j = 0;
            for (double v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<double>& entries() const noexcept { return entries_; }

    Vector col(std::size_t j) const {
        Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    // Columns first..cols()-1 as a new matrix.
    Matrix columns_from(std::size_t first) const {
        Matrix out(rows_, cols_ - first);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = first; j < cols_; ++j) out(i, j - first) = (*this)(i, j);
        return out;
    }

    bool operator==(const Matrix&) const = default;

    static std::string dims_string(std::size_t rows, std::size_t cols) {
        return std::to_string(rows) + "x" + std::to_string(cols);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

inline Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: " + Matrix::dims_string(a.rows(), a.cols()) + " times " +
                                Matrix::dims_string(b.rows(), b.cols()));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline Vector matvec(const Matrix& m, const Vector& v) {
    if (m.cols() != v.size()) {
        throw DimensionMismatch("matvec: matrix is " + Matrix::dims_string(m.rows(), m.cols()) +
                                ", vector has length " + std::to_string(v.size()));
    }
    Vector out(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

inline Vector vec_sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector subtraction: lengths " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    }
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot: lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double max_abs(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double max_abs(const Matrix& m) {
    return max_abs(m.entries());
}

inline bool all_finite(const Vector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline bool all_finite(const Matrix& m) { return all_finite(m.entries()); }

inline Vector to_real(const BinaryVector& bits) {
    Vector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = static_cast<double>(bits[i]);
    return out;
}

}  // namespace binlsq
