// Built-in test-problem generators: sampled function families with a
// planted binary combination and optional seeded uniform noise on b.
//
// Family paper1 (n = 3): offset sinusoids sin(2*pi*f0*t) + 1,
// cos(2*pi*f0*t) + 1, cos(4*pi*f0*t) + 1.
// Family paper2 (n = 10): sin/cos harmonics of f0 plus the exponential
// pair 1 - exp(-3000 t) and exp(-3000 t), no offset.
//
// Rows sample t = k * sample_step for k = 1..m. With normalize set, each
// column is divided by its max-abs entry so its largest entry becomes +-1.
// Noise w_k = noise_fraction * u_k with u_k uniform on [0,1) — additive
// and nonnegative, i.e. deliberately biased upward.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "binlsq/errors.hpp"
#include "binlsq/matrix.hpp"
#include "binlsq/problem.hpp"
#include "binlsq/rng.hpp"

namespace binlsq {

enum class Family { paper1, paper2 };

inline std::size_t family_unknowns(Family f) {
    return f == Family::paper1 ? 3 : 10;
}

inline std::string family_name(Family f) {
    return f == Family::paper1 ? "paper1" : "paper2";
}

inline Family family_from_name(const std::string& name) {
    if (name == "paper1") return Family::paper1;
    if (name == "paper2") return Family::paper2;
    throw SpecError("unknown family '" + name + "' (expected paper1 or paper2)");
}

struct GeneratorSpec {
    Family family = Family::paper1;
    std::size_t m = 10;          // sample count (rows)
    double period = 1e-3;        // T; base frequency is 1/T
    double sample_step = 1e-4;   // dT; row k samples t = k * dT
    bool normalize = true;
    BinaryVector planted_x = {1, 0, 1};
    double noise_fraction = 0.0;
    std::uint64_t seed = 0;

    // Canonical settings per family: paper1 is 10x3 with dT = T/10,
    // paper2 is 20x10 with dT = T/21 (21 phase steps per period).
    static GeneratorSpec defaults(Family f) {
        GeneratorSpec s;
        s.family = f;
        if (f == Family::paper1) {
            s.m = 10;
            s.sample_step = s.period / 10.0;
            s.planted_x = {1, 0, 1};
        } else {
            s.m = 20;
            s.sample_step = s.period / 21.0;
            s.planted_x = {1, 0, 1, 1, 1, 0, 1, 1, 1, 0};
        }
        return s;
    }

    void validate() const {
        const std::size_t n = family_unknowns(family);
        if (planted_x.size() != n) {
            throw SpecError("planted_x has " + std::to_string(planted_x.size()) +
                            " entries; family " + family_name(family) + " needs " +
                            std::to_string(n));
        }
        for (int bit : planted_x) {
            if (bit != 0 && bit != 1) throw SpecError("planted_x entries must be 0 or 1");
        }
        if (m <= n) {
            throw SpecError("m = " + std::to_string(m) + " must exceed n = " + std::to_string(n));
        }
        if (!(period > 0.0)) throw SpecError("period must be positive");
        if (!(sample_step > 0.0)) throw SpecError("sample_step must be positive");
        if (!(noise_fraction >= 0.0 && noise_fraction <= 1.0)) {
            throw SpecError("noise_fraction must lie in [0, 1]");
        }
    }
};

struct GeneratedProblem {
    Problem problem;   // clean system: b = A * planted_x
    Vector noisy_b;    // b + w
    Vector noise;      // w
    GeneratorSpec spec;
};

namespace detail {

inline double family_value(Family f, std::size_t j, double t, double f0) {
    using std::numbers::pi;
    const double w0 = pi * f0 * t;
    if (f == Family::paper1) {
        switch (j) {
            case 0: return std::sin(2.0 * w0) + 1.0;
            case 1: return std::cos(2.0 * w0) + 1.0;
            default: return std::cos(4.0 * w0) + 1.0;
        }
    }
    switch (j) {
        case 0: return std::sin(2.0 * w0);
        case 1: return std::cos(2.0 * w0);
        case 2: return std::cos(4.0 * w0);
        case 3: return std::sin(4.0 * w0);
        case 4: return std::sin(w0);
        case 5: return std::cos(w0);
        case 6: return std::cos(6.0 * w0);
        case 7: return std::sin(6.0 * w0);
        case 8: return 1.0 - std::exp(-3000.0 * t);
        default: return std::exp(-3000.0 * t);
    }
}

}  // namespace detail

// Divides each column by its max-abs entry. A column that is identically
// zero cannot be scaled and reports which one.
inline Matrix normalize_columns(const Matrix& a) {
    Matrix out = a;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double peak = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) peak = std::max(peak, std::abs(a(i, j)));
        if (peak == 0.0) {
            throw DegenerateColumn("column " + std::to_string(j + 1) +
                                   " is identically zero; cannot normalize");
        }
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j) / peak;
    }
    return out;
}

inline Matrix build_matrix(const GeneratorSpec& spec) {
    spec.validate();
    const std::size_t n = family_unknowns(spec.family);
    const double f0 = 1.0 / spec.period;

    Matrix a(spec.m, n, 0.0);
    for (std::size_t k = 0; k < spec.m; ++k) {
        const double t = static_cast<double>(k + 1) * spec.sample_step;  // first sample at t = dT
        for (std::size_t j = 0; j < n; ++j) a(k, j) = detail::family_value(spec.family, j, t, f0);
    }
    if (!spec.normalize) {
        // Still refuse identically-zero columns; they are degenerate input
        // no matter the scaling mode.
        for (std::size_t j = 0; j < n; ++j) {
            if (max_abs(a.col(j)) == 0.0) {
                throw DegenerateColumn("column " + std::to_string(j + 1) + " is identically zero");
            }
        }
        return a;
    }
    return normalize_columns(a);
}

inline Vector plant_rhs(const Matrix& a, const BinaryVector& planted_x) {
    return matvec(a, to_real(planted_x));
}

// w_k = noise_fraction * u_k, u_k uniform on [0,1) from the seeded stream.
inline std::pair<Vector, Vector> add_noise(const Vector& b, double noise_fraction,
                                           std::uint64_t seed) {
    if (!(noise_fraction >= 0.0 && noise_fraction <= 1.0)) {
        throw SpecError("noise_fraction must lie in [0, 1]");
    }
    std::mt19937_64 gen(seed);
    Vector w(b.size());
    Vector noisy(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
        w[k] = noise_fraction * uniform01(gen);
        noisy[k] = b[k] + w[k];
    }
    return {std::move(noisy), std::move(w)};
}

inline GeneratedProblem generate(const GeneratorSpec& spec) {
    spec.validate();
    Matrix a = build_matrix(spec);
    Vector b = plant_rhs(a, spec.planted_x);
    auto [noisy, w] = add_noise(b, spec.noise_fraction, spec.seed);
    Problem p(std::move(a), std::move(b));  // rejects rank-deficient sampling
    return GeneratedProblem{std::move(p), std::move(noisy), std::move(w), spec};
}

}  // namespace binlsq
