// The DPBB solver: one left-to-right sweep over the variables. At stage i
// both binary choices are scored by the least-squares completion over the
// remaining columns, and the cheaper branch is kept; the last variable is
// scored by the residual magnitude directly. Runs in exactly n stages.
//
// The factorization of the remaining columns is built once per stage and
// shared by both branches.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "binlsq/linalg.hpp"
#include "binlsq/matrix.hpp"
#include "binlsq/problem.hpp"

namespace binlsq {

// One evaluated branch at one stage.
struct BranchEval {
    int bit = 0;
    Vector state;                               // s_i under this choice
    std::optional<Vector> relaxed_completion;   // absent at the last stage
    Vector state_estimate;
    Vector error;                               // state - state_estimate
    double sse = 0.0;
};

struct StageRecord {
    std::size_t index = 0;  // 1-based variable index
    Vector incoming_state;
    BranchEval branch0;
    BranchEval branch1;
    int decision = 0;
};

struct SolveResult {
    BinaryVector x;
    double final_sse = 0.0;  // recomputed from A, x, b
    std::vector<StageRecord> stages;
    std::size_t factorizations = 0;  // pseudo-inverse constructions performed
};

namespace detail {

inline BranchEval evaluate_branch_with(const QrFactorization& factor, const Matrix& remaining,
                                       int bit, const Vector& incoming_state,
                                       const Vector& column) {
    BranchEval out;
    out.bit = bit;
    out.state = bit == 0 ? incoming_state : vec_sub(incoming_state, column);
    out.relaxed_completion = factor.solve(out.state);
    out.state_estimate = matvec(remaining, *out.relaxed_completion);
    out.error = vec_sub(out.state, out.state_estimate);
    out.sse = sse(out.error);
    return out;
}

}  // namespace detail

// Scores one branch of stage i (1 <= i <= n-1). `remaining` holds columns
// a_{i+1}..a_n and must have full column rank.
inline BranchEval evaluate_branch(std::size_t stage, int bit, const Vector& incoming_state,
                                  const Vector& column, const Matrix& remaining,
                                  const Tolerances& tol = {}) {
    (void)stage;
    QrFactorization factor(remaining);
    factor.require_full_column_rank(tol);
    return detail::evaluate_branch_with(factor, remaining, bit, incoming_state, column);
}

// Scores both branches of the final stage. No completion exists; the
// estimate is vacuous (zero) and the error is the state itself.
inline std::pair<BranchEval, BranchEval> evaluate_last(const Vector& incoming_state,
                                                       const Vector& last_column) {
    auto make = [&](int bit) {
        BranchEval out;
        out.bit = bit;
        out.state = bit == 0 ? incoming_state : vec_sub(incoming_state, last_column);
        out.state_estimate = Vector(incoming_state.size(), 0.0);
        out.error = out.state;
        out.sse = sse(out.error);
        return out;
    };
    return {make(0), make(1)};
}

inline SolveResult dpbb_solve(const Problem& p, const Tolerances& tol = {}) {
    const Matrix& a = p.matrix();
    const std::size_t n = p.unknowns();

    SolveResult result;
    result.x.resize(n);
    result.stages.reserve(n);

    Vector state = p.rhs();
    for (std::size_t i = 1; i <= n; ++i) {
        StageRecord rec;
        rec.index = i;
        rec.incoming_state = state;

        if (i < n) {
            const Matrix remaining = a.columns_from(i);
            QrFactorization factor(remaining);
            // Cannot trigger when A has full column rank; kept as a guard.
            factor.require_full_column_rank(tol);
            ++result.factorizations;
            const Vector column = a.col(i - 1);
            rec.branch0 = detail::evaluate_branch_with(factor, remaining, 0, state, column);
            rec.branch1 = detail::evaluate_branch_with(factor, remaining, 1, state, column);
        } else {
            auto [b0, b1] = evaluate_last(state, a.col(n - 1));
            rec.branch0 = std::move(b0);
            rec.branch1 = std::move(b1);
        }

        // Ties select 0.
        rec.decision = rec.branch1.sse < rec.branch0.sse ? 1 : 0;
        result.x[i - 1] = rec.decision;
        state = rec.decision == 1 ? rec.branch1.state : rec.branch0.state;
        result.stages.push_back(std::move(rec));
    }

    result.final_sse = residual_sse(a, result.x, p.rhs());
    return result;
}

}  // namespace binlsq
