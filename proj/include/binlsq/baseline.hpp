// Comparison method: one unconstrained least-squares solve of the whole
// system, then entrywise rounding to {0,1}. Cheap, and the standard foil
// for the staged solver on noisy right-hand sides.
#pragma once

#include <cstddef>
#include <utility>

#include "binlsq/linalg.hpp"
#include "binlsq/matrix.hpp"
#include "binlsq/problem.hpp"

namespace binlsq {

struct BaselineResult {
    Vector real_x;           // unconstrained least-squares solution
    BinaryVector rounded_x;  // real_x thresholded at 0.5 (ties round up)
    double sse_of_rounded = 0.0;
};

inline BinaryVector round_to_binary(const Vector& real_x, double threshold = 0.5) {
    BinaryVector out(real_x.size());
    for (std::size_t i = 0; i < real_x.size(); ++i) out[i] = real_x[i] >= threshold ? 1 : 0;
    return out;
}

inline BaselineResult direct_pseudo_solve(const Problem& p, const Tolerances& tol = {}) {
    BaselineResult r;
    r.real_x = least_squares(p.matrix(), p.rhs(), tol);
    r.rounded_x = round_to_binary(r.real_x);
    r.sse_of_rounded = residual_sse(p.matrix(), r.rounded_x, p.rhs());
    return r;
}

}  // namespace binlsq
