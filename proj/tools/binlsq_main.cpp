// binlsq command-line front end.
//
//   binlsq generate  — build a test problem and write its files
//   binlsq solve     — solve a matrix/rhs file pair by any method
//   binlsq bench     — seeded recovery-rate study across noise levels
//
// Exit codes: 0 ok, 2 file parse error, 3 dimension/shape error, 4 rank
// deficiency, 5 bad spec/usage, 1 anything else. All randomness flows
// from explicit seeds; reruns with the same arguments are byte-identical.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "binlsq/binlsq.hpp"

namespace {

using binlsq::Json;

// --------------------------------------------------------------------------
// Small parsing helpers for comma-separated flag values
// --------------------------------------------------------------------------

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

binlsq::BinaryVector parse_bits_flag(const std::string& text, const std::string& flag) {
    binlsq::BinaryVector bits;
    for (const std::string& part : split_commas(text)) {
        if (part == "0") {
            bits.push_back(0);
        } else if (part == "1") {
            bits.push_back(1);
        } else {
            throw binlsq::SpecError(flag + ": expected comma-separated 0/1 values, got '" +
                                    part + "'");
        }
    }
    return bits;
}

std::vector<double> parse_doubles_flag(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    for (const std::string& part : split_commas(text)) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw binlsq::SpecError(flag + ": cannot parse '" + part + "' as a number");
        }
    }
    return values;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw binlsq::ParseError(path + ": cannot open for reading");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return binlsq::parse_json_text(text, path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw binlsq::Error(path + ": cannot open for writing");
    out << text;
    out.flush();
    if (!out) throw binlsq::Error(path + ": write failed");
}

// --------------------------------------------------------------------------
// generate
// --------------------------------------------------------------------------

struct GenerateArgs {
    std::string family = "paper1";
    std::size_t m = 0;
    double period = 0.0;
    double step = 0.0;
    bool no_normalize = false;
    std::string planted;
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::string config;
    std::string out_dir;

    CLI::App* cmd = nullptr;
};

int run_generate(const GenerateArgs& a) {
    binlsq::GeneratorSpec spec;
    if (!a.config.empty()) {
        spec = binlsq::generator_spec_from_json(load_json_file(a.config), a.config);
    }
    if (a.cmd->count("--family") > 0 || a.config.empty()) {
        const binlsq::Family fam = binlsq::family_from_name(a.family);
        if (a.config.empty()) {
            spec = binlsq::GeneratorSpec::defaults(fam);
        } else {
            spec.family = fam;
        }
    }
    if (a.cmd->count("--m") > 0) spec.m = a.m;
    if (a.cmd->count("--period") > 0) spec.period = a.period;
    if (a.cmd->count("--step") > 0) spec.sample_step = a.step;
    if (a.cmd->count("--no-normalize") > 0) spec.normalize = false;
    if (a.cmd->count("--planted") > 0) spec.planted_x = parse_bits_flag(a.planted, "--planted");
    if (a.cmd->count("--noise") > 0) spec.noise_fraction = a.noise;
    if (a.cmd->count("--seed") > 0) spec.seed = a.seed;
    spec.validate();

    namespace fs = std::filesystem;
    const fs::path dir(a.out_dir);
    if (!fs::is_directory(dir)) {
        throw binlsq::SpecError("output directory '" + a.out_dir + "' does not exist");
    }

    const binlsq::GeneratedProblem gp = binlsq::generate(spec);
    const std::string matrix_path = (dir / "A.csv").string();
    const std::string rhs_path = (dir / "b.csv").string();
    const std::string noisy_path = (dir / "b_noisy.csv").string();
    const std::string planted_path = (dir / "x_planted.csv").string();
    binlsq::write_matrix_csv(matrix_path, gp.problem.matrix());
    binlsq::write_vector(rhs_path, gp.problem.rhs());
    binlsq::write_vector(noisy_path, gp.noisy_b);
    binlsq::write_vector(planted_path, binlsq::to_real(gp.spec.planted_x));

    Json out;
    out["spec"] = binlsq::generator_spec_json(gp.spec);
    out["files"] = Json{{"matrix", matrix_path},
                        {"clean_rhs", rhs_path},
                        {"noisy_rhs", noisy_path},
                        {"planted_x", planted_path}};
    std::cout << binlsq::dump_json(out);
    return 0;
}

// --------------------------------------------------------------------------
// solve
// --------------------------------------------------------------------------

struct SolveArgs {
    std::string matrix;
    std::string rhs;
    std::string method = "dpbb";
    bool trace = false;
    std::size_t oracle_cap = 24;

    CLI::App* cmd = nullptr;
};

int run_solve(const SolveArgs& a) {
    const binlsq::Method method = binlsq::method_from_name(a.method);
    if (a.trace && method != binlsq::Method::dpbb) {
        throw binlsq::SpecError("--trace requires --method dpbb");
    }

    const binlsq::Matrix mat = binlsq::read_matrix_csv(a.matrix);
    const binlsq::Vector rhs = binlsq::read_vector(a.rhs);
    const binlsq::Problem problem(mat, rhs);

    const Json source{{"matrix", a.matrix}, {"rhs", a.rhs}};
    Json out;
    switch (method) {
        case binlsq::Method::dpbb: {
            const binlsq::SolveResult r = binlsq::dpbb_solve(problem);
            if (a.trace) {
                out = binlsq::trace_document(problem, r, source);
            } else {
                out["method"] = "dpbb";
                out["problem"] =
                    Json{{"rows", problem.equations()}, {"cols", problem.unknowns()},
                         {"source", source}};
                out["x"] = Json(r.x);
                out["final_sse"] = r.final_sse;
                out["factorizations"] = r.factorizations;
            }
            break;
        }
        case binlsq::Method::oracle: {
            const binlsq::OracleResult r = binlsq::exhaustive_solve(problem, a.oracle_cap);
            out["method"] = "oracle";
            out["problem"] = Json{{"rows", problem.equations()}, {"cols", problem.unknowns()},
                                  {"source", source}};
            out["x"] = Json(r.x);
            out["final_sse"] = r.sse;
            out["candidates_evaluated"] = r.candidates_evaluated;
            break;
        }
        case binlsq::Method::baseline: {
            const binlsq::BaselineResult r = binlsq::direct_pseudo_solve(problem);
            out["method"] = "baseline";
            out["problem"] = Json{{"rows", problem.equations()}, {"cols", problem.unknowns()},
                                  {"source", source}};
            out["x"] = Json(r.rounded_x);
            out["final_sse"] = r.sse_of_rounded;
            Json real = Json::array();
            for (double v : r.real_x) real.push_back(v);
            out["real_x"] = std::move(real);
            break;
        }
    }
    std::cout << binlsq::dump_json(out);
    return 0;
}

// --------------------------------------------------------------------------
// bench
// --------------------------------------------------------------------------

struct BenchArgs {
    std::string family = "paper2";
    std::string noise = "0,0.1,0.2";
    std::size_t trials = 50;
    std::uint64_t seed = 0;
    std::string methods = "dpbb,baseline";
    std::string planted = "random";
    std::size_t oracle_cap = 24;
    std::size_t m = 0;
    double step = 0.0;
    std::string config;
    std::string out_prefix;

    CLI::App* cmd = nullptr;
};

int run_bench(const BenchArgs& a) {
    binlsq::BenchSpec spec;
    if (!a.config.empty()) {
        spec = binlsq::bench_spec_from_json(load_json_file(a.config), a.config);
    }
    const bool flags_only = a.config.empty();
    if (a.cmd->count("--family") > 0 || flags_only) {
        spec.family = binlsq::family_from_name(a.family);
    }
    if (a.cmd->count("--noise") > 0 || flags_only) {
        spec.noise_fractions = parse_doubles_flag(a.noise, "--noise");
    }
    if (a.cmd->count("--trials") > 0 || flags_only) spec.trials_per_point = a.trials;
    if (a.cmd->count("--seed") > 0 || flags_only) spec.base_seed = a.seed;
    if (a.cmd->count("--methods") > 0 || flags_only) {
        spec.methods.clear();
        for (const std::string& name : split_commas(a.methods)) {
            spec.methods.push_back(binlsq::method_from_name(name));
        }
    }
    if (a.cmd->count("--planted") > 0 || flags_only) {
        if (a.planted == "random") {
            spec.fixed_planted.reset();
        } else {
            spec.fixed_planted = parse_bits_flag(a.planted, "--planted");
        }
    }
    if (a.cmd->count("--oracle-cap") > 0) spec.oracle_cap = a.oracle_cap;
    if (a.cmd->count("--m") > 0) spec.m_override = a.m;
    if (a.cmd->count("--step") > 0) spec.sample_step_override = a.step;
    spec.validate();

    namespace fs = std::filesystem;
    const fs::path prefix(a.out_prefix);
    if (prefix.has_parent_path() && !fs::is_directory(prefix.parent_path())) {
        throw binlsq::SpecError("output directory '" + prefix.parent_path().string() +
                                "' does not exist");
    }

    const binlsq::BenchReport report = binlsq::run_bench(spec);
    for (const binlsq::BenchCell& cell : report.cells) {
        if (cell.skipped) {
            std::cerr << "warning: method " << binlsq::method_name(cell.method)
                      << " skipped at noise " << binlsq::format_double(cell.noise_fraction)
                      << " (" << binlsq::family_unknowns(spec.family)
                      << " unknowns exceed the oracle cap of " << spec.oracle_cap << ")\n";
        }
    }

    const std::string json_path = a.out_prefix + ".json";
    const std::string csv_path = a.out_prefix + ".csv";
    write_text_file(json_path, binlsq::dump_json(binlsq::bench_report_json(report)));
    write_text_file(csv_path, binlsq::bench_report_csv(report));

    Json out;
    out["files"] = Json{{"report", json_path}, {"table", csv_path}};
    std::cout << binlsq::dump_json(out);
    return 0;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const binlsq::ParseError*>(&e)) return 2;
    if (dynamic_cast<const binlsq::DimensionMismatch*>(&e)) return 3;
    if (dynamic_cast<const binlsq::InvalidProblem*>(&e)) return 3;
    if (dynamic_cast<const binlsq::RankDeficient*>(&e)) return 4;
    if (dynamic_cast<const binlsq::SpecError*>(&e)) return 5;
    if (dynamic_cast<const binlsq::TooLarge*>(&e)) return 5;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Binary least-squares toolkit: staged dynamic-programming solver, "
        "exhaustive oracle, and rounding baseline for x in {0,1}^n with Ax ~ b."};
    app.require_subcommand(1);

    GenerateArgs gen;
    gen.cmd = app.add_subcommand("generate", "Build a test problem and write its files");
    gen.cmd->add_option("--family", gen.family, "Problem family: paper1 or paper2")
        ->capture_default_str();
    gen.cmd->add_option("--m", gen.m, "Sample count (rows)");
    gen.cmd->add_option("--period", gen.period, "Signal period T in seconds");
    gen.cmd->add_option("--step", gen.step, "Sample interval dT in seconds");
    gen.cmd->add_flag("--no-normalize", gen.no_normalize,
                      "Skip per-column max-abs normalization");
    gen.cmd->add_option("--planted", gen.planted, "Planted solution, e.g. 1,0,1");
    gen.cmd->add_option("--noise", gen.noise, "Noise fraction in [0,1]");
    gen.cmd->add_option("--seed", gen.seed, "Noise seed (64-bit)");
    gen.cmd->add_option("--config", gen.config, "JSON spec file (flags override it)");
    gen.cmd->add_option("--out-dir", gen.out_dir, "Existing directory for output files")
        ->required();

    SolveArgs sol;
    sol.cmd = app.add_subcommand("solve", "Solve a matrix/rhs file pair");
    sol.cmd->add_option("--matrix", sol.matrix, "Matrix file (CSV rows)")->required();
    sol.cmd->add_option("--rhs", sol.rhs, "Right-hand-side file (one value per line)")
        ->required();
    sol.cmd->add_option("--method", sol.method, "dpbb, oracle, or baseline")
        ->capture_default_str();
    sol.cmd->add_flag("--trace", sol.trace, "Emit the full per-stage decision trace (dpbb)");
    sol.cmd->add_option("--oracle-cap", sol.oracle_cap,
                        "Max unknowns the oracle will enumerate")
        ->capture_default_str();

    BenchArgs ben;
    ben.cmd = app.add_subcommand("bench", "Recovery-rate study across noise levels");
    ben.cmd->add_option("--family", ben.family, "Problem family")->capture_default_str();
    ben.cmd->add_option("--noise", ben.noise, "Comma-separated noise fractions")
        ->capture_default_str();
    ben.cmd->add_option("--trials", ben.trials, "Trials per noise level")
        ->capture_default_str();
    ben.cmd->add_option("--seed", ben.seed, "Base seed (64-bit)")->capture_default_str();
    ben.cmd->add_option("--methods", ben.methods, "Comma-separated methods to run")
        ->capture_default_str();
    ben.cmd->add_option("--planted", ben.planted,
                        "'random' (fresh per trial) or a fixed bit vector like 1,0,1")
        ->capture_default_str();
    ben.cmd->add_option("--oracle-cap", ben.oracle_cap,
                        "Max unknowns the oracle will enumerate")
        ->capture_default_str();
    ben.cmd->add_option("--m", ben.m, "Override the family's sample count");
    ben.cmd->add_option("--step", ben.step, "Override the family's sample interval");
    ben.cmd->add_option("--config", ben.config, "JSON spec file (flags override it)");
    ben.cmd->add_option("--out", ben.out_prefix,
                        "Output prefix; writes <prefix>.json and <prefix>.csv")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 5;
    }

    try {
        if (gen.cmd->parsed()) return run_generate(gen);
        if (sol.cmd->parsed()) return run_solve(sol);
        if (ben.cmd->parsed()) return run_bench(ben);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
