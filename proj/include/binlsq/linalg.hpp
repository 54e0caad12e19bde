// Least-squares machinery: Householder QR with column pivoting, the
// normal-equation pseudo-inverse P = (B'B)^{-1} B', and rank checks.
//
// Two independent solve routes are kept on purpose: least_squares() goes
// through the orthogonal factorization, pseudo_inverse() through the Gram
// matrix. Their agreement is a library invariant (see tests).
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "binlsq/errors.hpp"
#include "binlsq/matrix.hpp"

namespace binlsq {

struct Tolerances {
    // Relative cutoff on pivot magnitudes below which a matrix is treated
    // as rank deficient.
    double rank_threshold = 1e-10;
    // Residual-consistency bound used when cross-checking solve paths.
    double solve_tolerance = 1e-8;
};

// Householder QR with column pivoting of an m x n matrix, m >= n.
// The pivoted |R_kk| magnitudes drive all rank decisions in the library.
class QrFactorization {
public:
    explicit QrFactorization(const Matrix& b) : m_(b.rows()), n_(b.cols()), work_(b) {
        if (m_ < n_ || n_ == 0) {
            throw DimensionMismatch("qr: matrix is " + Matrix::dims_string(m_, n_) +
                                    ", need rows >= cols >= 1");
        }
        perm_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) perm_[j] = j;
        householders_.reserve(n_);
        hh_norm2_.reserve(n_);

        for (std::size_t k = 0; k < n_; ++k) {
            pivot_largest_remaining_column(k);

            // Householder vector for column k, rows k..m-1.
            Vector v(m_ - k);
            double norm2 = 0.0;
            for (std::size_t i = k; i < m_; ++i) {
                v[i - k] = work_(i, k);
                norm2 += v[i - k] * v[i - k];
            }
            const double norm = std::sqrt(norm2);
            const double alpha = v[0] >= 0.0 ? -norm : norm;
            v[0] -= alpha;
            double vnorm2 = 0.0;
            for (double x : v) vnorm2 += x * x;

            householders_.push_back(v);
            hh_norm2_.push_back(vnorm2);
            work_(k, k) = alpha;
            for (std::size_t i = k + 1; i < m_; ++i) work_(i, k) = 0.0;

            if (vnorm2 > 0.0) {
                for (std::size_t j = k + 1; j < n_; ++j) {
                    double proj = 0.0;
                    for (std::size_t i = k; i < m_; ++i) proj += v[i - k] * work_(i, j);
                    const double scale = 2.0 * proj / vnorm2;
                    for (std::size_t i = k; i < m_; ++i) work_(i, j) -= scale * v[i - k];
                }
            }
        }
    }

    std::size_t rows() const noexcept { return m_; }
    std::size_t cols() const noexcept { return n_; }

    double smallest_pivot() const {
        double s = std::abs(work_(0, 0));
        for (std::size_t k = 1; k < n_; ++k) s = std::min(s, std::abs(work_(k, k)));
        return s;
    }

    double largest_pivot() const {
        double s = 0.0;
        for (std::size_t k = 0; k < n_; ++k) s = std::max(s, std::abs(work_(k, k)));
        return s;
    }

    bool full_column_rank(const Tolerances& tol) const {
        const double largest = largest_pivot();
        return std::isfinite(largest) && smallest_pivot() > tol.rank_threshold * largest;
    }

    void require_full_column_rank(const Tolerances& tol) const {
        if (!full_column_rank(tol)) {
            throw RankDeficient("rank deficient " + Matrix::dims_string(m_, n_) +
                                    " matrix: pivot " + std::to_string(smallest_pivot()) +
                                    " vs largest " + std::to_string(largest_pivot()),
                                smallest_pivot(), largest_pivot());
        }
    }

    // Least-squares solution of B x = rhs. Caller is responsible for the
    // rank check; division by a zero pivot is reported defensively.
    Vector solve(const Vector& rhs) const {
        if (rhs.size() != m_) {
            throw DimensionMismatch("qr solve: matrix is " + Matrix::dims_string(m_, n_) +
                                    ", rhs has length " + std::to_string(rhs.size()));
        }
        Vector y = rhs;
        for (std::size_t k = 0; k < n_; ++k) {
            if (hh_norm2_[k] == 0.0) continue;
            const Vector& v = householders_[k];
            double proj = 0.0;
            for (std::size_t i = k; i < m_; ++i) proj += v[i - k] * y[i];
            const double scale = 2.0 * proj / hh_norm2_[k];
            for (std::size_t i = k; i < m_; ++i) y[i] -= scale * v[i - k];
        }
        Vector z(n_);
        for (std::size_t k = n_; k-- > 0;) {
            double acc = y[k];
            for (std::size_t j = k + 1; j < n_; ++j) acc -= work_(k, j) * z[j];
            const double pivot = work_(k, k);
            if (pivot == 0.0) {
                throw RankDeficient("qr solve: zero pivot at column " + std::to_string(k), 0.0,
                                    largest_pivot());
            }
            z[k] = acc / pivot;
        }
        Vector x(n_);
        for (std::size_t k = 0; k < n_; ++k) x[perm_[k]] = z[k];
        return x;
    }

private:
    void pivot_largest_remaining_column(std::size_t k) {
        std::size_t best = k;
        double best_norm2 = -1.0;
        for (std::size_t j = k; j < n_; ++j) {
            double norm2 = 0.0;
            for (std::size_t i = k; i < m_; ++i) norm2 += work_(i, j) * work_(i, j);
            if (norm2 > best_norm2) {
                best_norm2 = norm2;
                best = j;
            }
        }
        if (best != k) {
            for (std::size_t i = 0; i < m_; ++i) std::swap(work_(i, k), work_(i, best));
            std::swap(perm_[k], perm_[best]);
        }
    }

    std::size_t m_;
    std::size_t n_;
    Matrix work_;                        // R in the upper triangle after factoring
    std::vector<Vector> householders_;   // reflector k acts on rows k..m-1
    std::vector<double> hh_norm2_;
    std::vector<std::size_t> perm_;      // factored column k came from perm_[k]
};

// Summed squared error: |v|_2^2.
inline double sse(const Vector& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc;
}

inline bool check_full_column_rank(const Matrix& a, const Tolerances& tol = {}) {
    if (a.rows() < a.cols() || a.cols() == 0) return false;
    return QrFactorization(a).full_column_rank(tol);
}

namespace detail {

// Cholesky factor L of a symmetric positive definite matrix, G = L L'.
inline Matrix cholesky(const Matrix& g) {
    const std::size_t n = g.rows();
    double largest_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) largest_diag = std::max(largest_diag, std::abs(g(i, i)));
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = g(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw RankDeficient("gram matrix not positive definite at pivot " + std::to_string(j),
                                d, largest_diag);
        }
        l(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double acc = g(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
            l(i, j) = acc / l(j, j);
        }
    }
    return l;
}

// Solves L L' x = rhs by forward then back substitution.
inline Vector cholesky_solve(const Matrix& l, const Vector& rhs) {
    const std::size_t n = l.rows();
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = rhs[i];
        for (std::size_t k = 0; k < i; ++k) acc -= l(i, k) * y[k];
        y[i] = acc / l(i, i);
    }
    Vector x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = y[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= l(k, i) * x[k];
        x[i] = acc / l(i, i);
    }
    return x;
}

}  // namespace detail

// P = (B'B)^{-1} B' for a strictly overdetermined full-column-rank B.
// P has dims cols x rows and P * B is the identity up to rounding.
inline Matrix pseudo_inverse(const Matrix& b, const Tolerances& tol = {}) {
    if (b.rows() <= b.cols() || b.cols() == 0) {
        throw DimensionMismatch("pseudo_inverse: matrix is " +
                                Matrix::dims_string(b.rows(), b.cols()) +
                                ", need rows > cols >= 1");
    }
    QrFactorization(b).require_full_column_rank(tol);

    const Matrix bt = transpose(b);
    const Matrix gram = matmul(bt, b);
    const Matrix l = detail::cholesky(gram);

    Matrix p(b.cols(), b.rows());
    Vector rhs(b.cols());
    for (std::size_t j = 0; j < b.rows(); ++j) {
        for (std::size_t i = 0; i < b.cols(); ++i) rhs[i] = bt(i, j);
        const Vector x = detail::cholesky_solve(l, rhs);
        for (std::size_t i = 0; i < b.cols(); ++i) p(i, j) = x[i];
    }
    return p;
}

// Real-valued least-squares solution of B x = s via the orthogonal route.
inline Vector least_squares(const Matrix& b, const Vector& s, const Tolerances& tol = {}) {
    if (b.rows() != s.size()) {
        throw DimensionMismatch("least_squares: matrix is " +
                                Matrix::dims_string(b.rows(), b.cols()) + ", rhs has length " +
                                std::to_string(s.size()));
    }
    QrFactorization f(b);
    f.require_full_column_rank(tol);
    return f.solve(s);
}

}  // namespace binlsq
