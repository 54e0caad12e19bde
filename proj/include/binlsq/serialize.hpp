// JSON documents and config parsing. Insertion-order objects with the
// library's shortest round-trip number formatting keep every emitted
// document byte-stable across reruns and lossless for doubles.
//
// Error mapping: malformed JSON text -> ParseError; a well-formed config
// with a bad key, type, or value -> SpecError.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "binlsq/bench.hpp"
#include "binlsq/errors.hpp"
#include "binlsq/generator.hpp"
#include "binlsq/io.hpp"
#include "binlsq/matrix.hpp"
#include "binlsq/problem.hpp"
#include "binlsq/solver.hpp"

namespace binlsq {

using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

namespace detail {

inline Json vector_json(const Vector& v) {
    Json arr = Json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

inline Json binary_json(const BinaryVector& x) {
    Json arr = Json::array();
    for (int b : x) arr.push_back(b);
    return arr;
}

inline void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                                const std::string& origin) {
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) {
            throw SpecError(origin + ": unknown config key '" + item.key() + "'");
        }
    }
}

template <typename T>
T config_value(const Json& j, const std::string& key, const std::string& origin) {
    try {
        return j.at(key).template get<T>();
    } catch (const nlohmann::json::exception&) {
        throw SpecError(origin + ": config key '" + key + "' has the wrong type");
    }
}

inline BinaryVector config_bits(const Json& j, const std::string& key,
                                const std::string& origin) {
    const auto values = config_value<std::vector<int>>(j, key, origin);
    return BinaryVector(values.begin(), values.end());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Solver output documents
// ---------------------------------------------------------------------------

inline Json branch_json(const BranchEval& b) {
    Json j;
    j["bit"] = b.bit;
    j["new_state"] = detail::vector_json(b.state);
    j["relaxed_completion"] =
        b.relaxed_completion ? detail::vector_json(*b.relaxed_completion) : Json(nullptr);
    j["state_estimate"] = detail::vector_json(b.state_estimate);
    j["estimation_error"] = detail::vector_json(b.error);
    j["sse"] = b.sse;
    return j;
}

inline Json stage_json(const StageRecord& s) {
    Json j;
    j["index"] = s.index;
    j["variable"] = "x_" + std::to_string(s.index);
    j["decision"] = s.decision;
    j["initial_state"] = detail::vector_json(s.incoming_state);
    j["branches"] = Json{{"bit0", branch_json(s.branch0)}, {"bit1", branch_json(s.branch1)}};
    return j;
}

// `provenance` names where the problem came from (file paths or generator
// echo); pass an empty object when unknown.
inline Json trace_document(const Problem& p, const SolveResult& r, Json provenance) {
    Json j;
    j["method"] = "dpbb";
    j["problem"] = Json{{"rows", p.equations()}, {"cols", p.unknowns()}};
    if (!provenance.empty()) j["problem"]["source"] = std::move(provenance);
    j["x"] = detail::binary_json(r.x);
    j["final_sse"] = r.final_sse;
    j["factorizations"] = r.factorizations;
    Json stages = Json::array();
    for (const StageRecord& s : r.stages) stages.push_back(stage_json(s));
    j["stages"] = std::move(stages);
    return j;
}

// ---------------------------------------------------------------------------
// Generator spec <-> JSON
// ---------------------------------------------------------------------------

inline Json generator_spec_json(const GeneratorSpec& s) {
    Json j;
    j["family"] = family_name(s.family);
    j["m"] = s.m;
    j["period"] = s.period;
    j["sample_step"] = s.sample_step;
    j["normalize"] = s.normalize;
    j["planted_x"] = detail::binary_json(s.planted_x);
    j["noise_fraction"] = s.noise_fraction;
    j["seed"] = s.seed;
    return j;
}

// Missing keys fall back to the family defaults, so a config may be as
// small as {"family": "paper2"}.
inline GeneratorSpec generator_spec_from_json(const Json& j, const std::string& origin) {
    if (!j.is_object()) throw SpecError(origin + ": config must be a JSON object");
    detail::reject_unknown_keys(j,
                                {"family", "m", "period", "sample_step", "normalize",
                                 "planted_x", "noise_fraction", "seed"},
                                origin);
    Family family = Family::paper1;
    if (j.contains("family")) {
        family = family_from_name(detail::config_value<std::string>(j, "family", origin));
    }
    GeneratorSpec s = GeneratorSpec::defaults(family);
    if (j.contains("m")) s.m = detail::config_value<std::size_t>(j, "m", origin);
    if (j.contains("period")) s.period = detail::config_value<double>(j, "period", origin);
    if (j.contains("sample_step")) {
        s.sample_step = detail::config_value<double>(j, "sample_step", origin);
    }
    if (j.contains("normalize")) s.normalize = detail::config_value<bool>(j, "normalize", origin);
    if (j.contains("planted_x")) s.planted_x = detail::config_bits(j, "planted_x", origin);
    if (j.contains("noise_fraction")) {
        s.noise_fraction = detail::config_value<double>(j, "noise_fraction", origin);
    }
    if (j.contains("seed")) s.seed = detail::config_value<std::uint64_t>(j, "seed", origin);
    s.validate();
    return s;
}

// ---------------------------------------------------------------------------
// Bench spec <-> JSON, bench report serialization
// ---------------------------------------------------------------------------

inline Json bench_spec_json(const BenchSpec& s) {
    Json j;
    j["family"] = family_name(s.family);
    j["noise_fractions"] = detail::vector_json(s.noise_fractions);
    j["trials_per_point"] = s.trials_per_point;
    j["base_seed"] = s.base_seed;
    Json methods = Json::array();
    for (Method m : s.methods) methods.push_back(method_name(m));
    j["methods"] = std::move(methods);
    j["planted_x"] = s.fixed_planted ? detail::binary_json(*s.fixed_planted) : Json("random");
    j["oracle_cap"] = s.oracle_cap;
    if (s.m_override) j["m"] = *s.m_override;
    if (s.sample_step_override) j["sample_step"] = *s.sample_step_override;
    return j;
}

inline BenchSpec bench_spec_from_json(const Json& j, const std::string& origin) {
    if (!j.is_object()) throw SpecError(origin + ": config must be a JSON object");
    detail::reject_unknown_keys(j,
                                {"family", "noise_fractions", "trials_per_point", "base_seed",
                                 "methods", "planted_x", "oracle_cap", "m", "sample_step"},
                                origin);
    BenchSpec s;
    if (j.contains("family")) {
        s.family = family_from_name(detail::config_value<std::string>(j, "family", origin));
    }
    if (j.contains("noise_fractions")) {
        s.noise_fractions = detail::config_value<std::vector<double>>(j, "noise_fractions", origin);
    }
    if (j.contains("trials_per_point")) {
        s.trials_per_point = detail::config_value<std::size_t>(j, "trials_per_point", origin);
    }
    if (j.contains("base_seed")) {
        s.base_seed = detail::config_value<std::uint64_t>(j, "base_seed", origin);
    }
    if (j.contains("methods")) {
        s.methods.clear();
        for (const std::string& name :
             detail::config_value<std::vector<std::string>>(j, "methods", origin)) {
            s.methods.push_back(method_from_name(name));
        }
    }
    if (j.contains("planted_x")) {
        const Json& p = j.at("planted_x");
        if (p.is_string() && p.get<std::string>() == "random") {
            s.fixed_planted.reset();
        } else {
            s.fixed_planted = detail::config_bits(j, "planted_x", origin);
        }
    }
    if (j.contains("oracle_cap")) {
        s.oracle_cap = detail::config_value<std::size_t>(j, "oracle_cap", origin);
    }
    if (j.contains("m")) s.m_override = detail::config_value<std::size_t>(j, "m", origin);
    if (j.contains("sample_step")) {
        s.sample_step_override = detail::config_value<double>(j, "sample_step", origin);
    }
    s.validate();
    return s;
}

inline Json bench_cell_json(const BenchCell& c) {
    Json j;
    j["method"] = method_name(c.method);
    j["noise_fraction"] = c.noise_fraction;
    j["trials"] = c.trials;
    j["exact_matches"] = c.exact_matches;
    j["failed_trials"] = c.failed_trials;
    j["skipped"] = c.skipped;
    j["recovery_rate"] = c.recovery_rate;
    j["mean_final_sse"] = c.mean_final_sse;
    j["mean_bit_error_rate"] = c.mean_bit_error_rate;
    return j;
}

inline Json bench_report_json(const BenchReport& r) {
    Json j;
    j["spec"] = bench_spec_json(r.spec);
    Json seeds = Json::array();
    for (const auto& level : r.trial_seeds) {
        Json row = Json::array();
        for (std::uint64_t s : level) row.push_back(s);
        seeds.push_back(std::move(row));
    }
    j["trial_seeds"] = std::move(seeds);
    Json cells = Json::array();
    for (const BenchCell& c : r.cells) cells.push_back(bench_cell_json(c));
    j["cells"] = std::move(cells);
    return j;
}

// One row per method x noise level, plot-ready.
inline std::string bench_report_csv(const BenchReport& r) {
    std::string out =
        "method,noise_fraction,trials,exact_matches,failed_trials,skipped,"
        "recovery_rate,mean_final_sse,mean_bit_error_rate\n";
    for (const BenchCell& c : r.cells) {
        out += method_name(c.method);
        out += ',';
        out += format_double(c.noise_fraction);
        out += ',';
        out += std::to_string(c.trials);
        out += ',';
        out += std::to_string(c.exact_matches);
        out += ',';
        out += std::to_string(c.failed_trials);
        out += ',';
        out += c.skipped ? "1" : "0";
        out += ',';
        out += format_double(c.recovery_rate);
        out += ',';
        out += format_double(c.mean_final_sse);
        out += ',';
        out += format_double(c.mean_bit_error_rate);
        out += '\n';
    }
    return out;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace binlsq
