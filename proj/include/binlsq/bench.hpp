// Seeded Monte Carlo harness: recovery rates of the staged solver vs. the
// direct-rounding baseline (and optionally the exhaustive oracle) across a
// grid of noise fractions.
//
// Trial t at noise level l draws its seed as trial_seed(base_seed, l, t),
// so adding levels or trials never perturbs existing ones. Every enabled
// method sees the identical generated problem at a given (l, t). The
// report is a pure function of its BenchSpec.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "binlsq/baseline.hpp"
#include "binlsq/errors.hpp"
#include "binlsq/generator.hpp"
#include "binlsq/matrix.hpp"
#include "binlsq/oracle.hpp"
#include "binlsq/problem.hpp"
#include "binlsq/rng.hpp"
#include "binlsq/solver.hpp"

namespace binlsq {

enum class Method { dpbb, baseline, oracle };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::dpbb: return "dpbb";
        case Method::baseline: return "baseline";
        default: return "oracle";
    }
}

inline Method method_from_name(const std::string& name) {
    if (name == "dpbb") return Method::dpbb;
    if (name == "baseline") return Method::baseline;
    if (name == "oracle") return Method::oracle;
    throw SpecError("unknown method '" + name + "' (expected dpbb, baseline, or oracle)");
}

struct BenchSpec {
    Family family = Family::paper2;
    std::vector<double> noise_fractions;
    std::size_t trials_per_point = 1;
    std::uint64_t base_seed = 0;
    std::vector<Method> methods = {Method::dpbb, Method::baseline};
    // nullopt: a fresh random planted vector per trial. Set: every trial
    // plants this exact vector.
    std::optional<BinaryVector> fixed_planted;
    std::size_t oracle_cap = 24;
    // Optional departures from the family defaults.
    std::optional<std::size_t> m_override;
    std::optional<double> sample_step_override;

    void validate() const {
        if (trials_per_point < 1) throw SpecError("trials_per_point must be at least 1");
        for (double f : noise_fractions) {
            if (!(f >= 0.0 && f <= 1.0)) throw SpecError("noise fractions must lie in [0, 1]");
        }
        if (fixed_planted) {
            const std::size_t n = family_unknowns(family);
            if (fixed_planted->size() != n) {
                throw SpecError("fixed planted vector has " +
                                std::to_string(fixed_planted->size()) + " entries; family " +
                                family_name(family) + " needs " + std::to_string(n));
            }
            for (int bit : *fixed_planted) {
                if (bit != 0 && bit != 1) throw SpecError("planted entries must be 0 or 1");
            }
        }
        // Surface bad overrides up front instead of as n_trials failures.
        trial_generator_spec(0.0, 0).validate();
    }

    // The generator spec a trial would use, before planting. Seeds split
    // off the trial seed: first draw seeds the planted vector, second
    // seeds the noise stream.
    GeneratorSpec trial_generator_spec(double noise_fraction, std::uint64_t seed) const {
        GeneratorSpec gs = GeneratorSpec::defaults(family);
        if (m_override) gs.m = *m_override;
        if (sample_step_override) gs.sample_step = *sample_step_override;
        gs.noise_fraction = noise_fraction;
        std::uint64_t chain = seed;
        const std::uint64_t planted_seed = splitmix64(chain);
        gs.seed = splitmix64(chain);
        if (fixed_planted) {
            gs.planted_x = *fixed_planted;
        } else {
            std::mt19937_64 pg(planted_seed);
            gs.planted_x = random_bits(pg, family_unknowns(family));
        }
        return gs;
    }
};

struct BenchCell {
    Method method = Method::dpbb;
    double noise_fraction = 0.0;
    std::size_t trials = 0;         // attempted
    std::size_t exact_matches = 0;  // returned x equals the planted x
    std::size_t failed_trials = 0;  // generation or solve threw
    bool skipped = false;           // oracle disabled: n exceeds the cap
    double recovery_rate = 0.0;     // exact_matches / trials_per_point
    double mean_final_sse = 0.0;      // over successful trials; 0 when none
    double mean_bit_error_rate = 0.0;
};

struct BenchReport {
    BenchSpec spec;
    std::vector<std::vector<std::uint64_t>> trial_seeds;  // [level][trial]
    std::vector<BenchCell> cells;                         // method-major, levels in spec order
};

inline BenchReport run_bench(const BenchSpec& spec) {
    spec.validate();
    const std::size_t n = family_unknowns(spec.family);
    const std::size_t levels = spec.noise_fractions.size();
    const std::size_t trials = spec.trials_per_point;

    BenchReport report;
    report.spec = spec;
    report.trial_seeds.assign(levels, std::vector<std::uint64_t>(trials, 0));
    for (std::size_t l = 0; l < levels; ++l) {
        for (std::size_t t = 0; t < trials; ++t) {
            report.trial_seeds[l][t] = trial_seed(spec.base_seed, l, t);
        }
    }

    struct Acc {
        std::size_t matches = 0;
        std::size_t failed = 0;
        std::size_t succeeded = 0;
        double sse_sum = 0.0;
        double bit_error_sum = 0.0;
    };
    std::vector<std::vector<Acc>> acc(spec.methods.size(), std::vector<Acc>(levels));

    std::vector<bool> method_skipped(spec.methods.size(), false);
    for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
        method_skipped[mi] = spec.methods[mi] == Method::oracle && n > spec.oracle_cap;
    }

    for (std::size_t l = 0; l < levels; ++l) {
        for (std::size_t t = 0; t < trials; ++t) {
            std::optional<Problem> noisy;
            BinaryVector planted;
            try {
                const GeneratorSpec gs =
                    spec.trial_generator_spec(spec.noise_fractions[l], report.trial_seeds[l][t]);
                GeneratedProblem gp = generate(gs);
                planted = gs.planted_x;
                noisy.emplace(gp.problem.matrix(), std::move(gp.noisy_b));
            } catch (const Error&) {
                for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
                    if (!method_skipped[mi]) ++acc[mi][l].failed;
                }
                continue;
            }

            for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
                if (method_skipped[mi]) continue;
                Acc& a = acc[mi][l];
                try {
                    BinaryVector x;
                    double final_sse = 0.0;
                    switch (spec.methods[mi]) {
                        case Method::dpbb: {
                            SolveResult r = dpbb_solve(*noisy);
                            x = std::move(r.x);
                            final_sse = r.final_sse;
                            break;
                        }
                        case Method::baseline: {
                            BaselineResult r = direct_pseudo_solve(*noisy);
                            x = std::move(r.rounded_x);
                            final_sse = r.sse_of_rounded;
                            break;
                        }
                        case Method::oracle: {
                            OracleResult r = exhaustive_solve(*noisy, spec.oracle_cap);
                            x = std::move(r.x);
                            final_sse = r.sse;
                            break;
                        }
                    }
                    ++a.succeeded;
                    a.sse_sum += final_sse;
                    std::size_t wrong = 0;
                    for (std::size_t i = 0; i < n; ++i) wrong += x[i] != planted[i];
                    a.bit_error_sum += static_cast<double>(wrong) / static_cast<double>(n);
                    if (wrong == 0) ++a.matches;
                } catch (const Error&) {
                    ++a.failed;
                }
            }
        }
    }

    for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
        for (std::size_t l = 0; l < levels; ++l) {
            const Acc& a = acc[mi][l];
            BenchCell cell;
            cell.method = spec.methods[mi];
            cell.noise_fraction = spec.noise_fractions[l];
            cell.skipped = method_skipped[mi];
            cell.trials = cell.skipped ? 0 : trials;
            cell.exact_matches = a.matches;
            cell.failed_trials = a.failed;
            cell.recovery_rate =
                cell.skipped ? 0.0
                             : static_cast<double>(a.matches) / static_cast<double>(trials);
            if (a.succeeded > 0) {
                cell.mean_final_sse = a.sse_sum / static_cast<double>(a.succeeded);
                cell.mean_bit_error_rate = a.bit_error_sum / static_cast<double>(a.succeeded);
            }
            report.cells.push_back(cell);
        }
    }
    return report;
}

}  // namespace binlsq
