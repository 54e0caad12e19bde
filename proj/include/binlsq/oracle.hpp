// Exhaustive reference minimizer of |A x - b|^2 over all 2^n binary
// vectors. Ties break to the lexicographically smallest x (x_1 most
// significant, 0 before 1).
//
// The contract is the naive per-candidate recomputation; for larger n an
// incremental Gray-code residual scan finds the same minimizer faster.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "binlsq/errors.hpp"
#include "binlsq/matrix.hpp"
#include "binlsq/problem.hpp"

namespace binlsq {

struct OracleResult {
    BinaryVector x;
    double sse = 0.0;  // recomputed from A, x, b
    std::uint64_t candidates_evaluated = 0;
};

namespace detail {

inline bool lex_less(const BinaryVector& a, const BinaryVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Counter order equals lexicographic order when x_1 is the top bit.
inline BinaryVector bits_of(std::uint64_t counter, std::size_t n) {
    BinaryVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = static_cast<int>((counter >> (n - 1 - j)) & 1u);
    return x;
}

inline OracleResult exhaustive_naive(const Matrix& a, const Vector& b) {
    const std::size_t n = a.cols();
    const std::uint64_t total = std::uint64_t{1} << n;

    OracleResult best;
    best.x = bits_of(0, n);
    best.sse = residual_sse(a, best.x, b);
    for (std::uint64_t c = 1; c < total; ++c) {
        const BinaryVector x = bits_of(c, n);
        const double s = residual_sse(a, x, b);
        if (s < best.sse || (s == best.sse && lex_less(x, best.x))) {
            best.sse = s;
            best.x = x;
        }
    }
    best.candidates_evaluated = total;
    return best;
}

inline OracleResult exhaustive_gray(const Matrix& a, const Vector& b) {
    const std::size_t n = a.cols();
    const std::size_t m = a.rows();
    const std::uint64_t total = std::uint64_t{1} << n;

    // Residual r = b - A x, updated by one column per Gray step. Low bit
    // of the Gray counter corresponds to x_n.
    Vector r = b;
    BinaryVector x(n, 0);
    BinaryVector best_x = x;
    double best_sse = sse(r);

    for (std::uint64_t c = 1; c < total; ++c) {
        std::size_t bit_pos = 0;
        while (((c >> bit_pos) & 1u) == 0u) ++bit_pos;
        const std::size_t j = n - 1 - bit_pos;
        if (x[j] == 0) {
            x[j] = 1;
            for (std::size_t i = 0; i < m; ++i) r[i] -= a(i, j);
        } else {
            x[j] = 0;
            for (std::size_t i = 0; i < m; ++i) r[i] += a(i, j);
        }
        const double s = sse(r);
        if (s < best_sse || (s == best_sse && lex_less(x, best_x))) {
            best_sse = s;
            best_x = x;
        }
    }

    OracleResult best;
    best.x = best_x;
    best.sse = residual_sse(a, best_x, b);  // drop incremental rounding
    best.candidates_evaluated = total;
    return best;
}

// Largest n the naive scan handles before switching to the Gray scan.
inline constexpr std::size_t kOracleNaiveMaxUnknowns = 16;

}  // namespace detail

inline OracleResult exhaustive_solve(const Problem& p, std::size_t max_n = 24) {
    const std::size_t n = p.unknowns();
    if (n > max_n || n >= 63) {
        throw TooLarge("exhaustive solve: " + std::to_string(n) + " unknowns exceed the cap of " +
                       std::to_string(max_n));
    }
    return n <= detail::kOracleNaiveMaxUnknowns
               ? detail::exhaustive_naive(p.matrix(), p.rhs())
               : detail::exhaustive_gray(p.matrix(), p.rhs());
}

}  // namespace binlsq
