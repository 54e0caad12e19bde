#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "binlsq/errors.hpp"
#include "binlsq/linalg.hpp"
#include "binlsq/matrix.hpp"

namespace binlsq {

// A strictly overdetermined linear system A x = b with full column rank,
// whose solution is sought over binary x. Validated on construction.
class Problem {
public:
    Problem(Matrix a, Vector b, const Tolerances& tol = {})
        : a_(std::move(a)), b_(std::move(b)) {
        if (a_.cols() == 0 || a_.rows() <= a_.cols()) {
            throw InvalidProblem("problem: matrix is " +
                                 Matrix::dims_string(a_.rows(), a_.cols()) +
                                 ", need rows > cols >= 1");
        }
        if (a_.rows() != b_.size()) {
            throw InvalidProblem("problem: matrix has " + std::to_string(a_.rows()) +
                                 " rows, rhs has length " + std::to_string(b_.size()));
        }
        if (!all_finite(a_) || !all_finite(b_)) {
            throw InvalidProblem("problem: non-finite entries");
        }
        QrFactorization(a_).require_full_column_rank(tol);
    }

    const Matrix& matrix() const noexcept { return a_; }
    const Vector& rhs() const noexcept { return b_; }

    std::size_t equations() const noexcept { return a_.rows(); }
    std::size_t unknowns() const noexcept { return a_.cols(); }

private:
    Matrix a_;
    Vector b_;
};

// |A x - b|^2 for a binary candidate, recomputed from scratch. All solvers
// report this value through the same code path so their results compare
// exactly.
inline double residual_sse(const Matrix& a, const BinaryVector& x, const Vector& b) {
    return sse(vec_sub(matvec(a, to_real(x)), b));
}

}  // namespace binlsq
