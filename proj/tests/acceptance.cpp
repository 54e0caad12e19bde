// Acceptance suite: eight release gates, one PASS/FAIL line each, nonzero
// exit if any gate fails. Self-contained on purpose — no test framework —
// so the output reads as a checklist.
//
// Gate 8 spawns the real command-line binary (path injected via
// BINLSQ_CLI_PATH) and compares output bytes across reruns.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "binlsq/binlsq.hpp"
#include "reference_values.hpp"

namespace fs = std::filesystem;
using namespace binlsq;

namespace {

int g_failures = 0;

void report(int index, const std::string& title, bool ok, const std::string& detail) {
    if (ok) {
        std::printf("PASS  %d. %s\n", index, title.c_str());
    } else {
        ++g_failures;
        std::printf("FAIL  %d. %s — %s\n", index, title.c_str(),
                    detail.empty() ? "see criteria" : detail.c_str());
    }
}

bool near_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool near_rel(double a, double b, double tol) { return std::abs(a / b - 1.0) <= tol; }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

double uniform_pm1(std::mt19937_64& gen) { return 2.0 * uniform01(gen) - 1.0; }

Matrix random_full_rank(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
    while (true) {
        Matrix m(rows, cols, 0.0);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_pm1(gen);
        }
        if (check_full_column_rank(m)) return m;
    }
}

Vector random_vector(std::mt19937_64& gen, std::size_t len) {
    Vector v(len);
    for (double& x : v) x = uniform_pm1(gen);
    return v;
}

// --------------------------------------------------------------------------
// 1. Generator reproduces the reference 10x3 matrix.
// --------------------------------------------------------------------------

bool criterion1(std::string& detail) {
    const Matrix a = build_matrix(GeneratorSpec::defaults(Family::paper1));
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (!near_abs(a(i, j), refvals::kA1Display[i][j], 5e-5)) {
                detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") = " + fmt(a(i, j)) + ", reference " +
                         fmt(refvals::kA1Display[i][j]);
                return false;
            }
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 2. Pseudo-inverses of the trailing column blocks match the references.
// --------------------------------------------------------------------------

bool criterion2(std::string& detail) {
    const Matrix a = build_matrix(GeneratorSpec::defaults(Family::paper1));
    const Matrix p1 = pseudo_inverse(a.columns_from(1));  // columns 2..3
    const Matrix p2 = pseudo_inverse(a.columns_from(2));  // column 3
    if (p1.rows() != 2 || p1.cols() != 10 || p2.rows() != 1 || p2.cols() != 10) {
        detail = "unexpected pseudo-inverse shape";
        return false;
    }
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 10; ++j) {
            if (!near_abs(p1(i, j), refvals::kP1Display[i][j], 5e-5)) {
                detail = "first block entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") = " + fmt(p1(i, j));
                return false;
            }
        }
    }
    for (std::size_t j = 0; j < 10; ++j) {
        if (!near_abs(p2(0, j), refvals::kP2Display[j], 5e-6)) {
            detail = "second block entry " + std::to_string(j + 1) + " = " + fmt(p2(0, j));
            return false;
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 3. Staged-solver trace on the clean 10x3 instance.
// --------------------------------------------------------------------------

bool criterion3(std::string& detail) {
    const GeneratedProblem g = generate(GeneratorSpec::defaults(Family::paper1));
    const SolveResult r = dpbb_solve(g.problem);
    if (r.x != BinaryVector{1, 0, 1}) {
        detail = "decisions differ from (1, 0, 1)";
        return false;
    }
    const bool sse_ok = near_rel(r.stages[0].branch0.sse, refvals::kStage1Sse0, 1e-3) &&
                        r.stages[0].branch1.sse <= refvals::kTinySse &&
                        r.stages[1].branch0.sse <= refvals::kTinySse &&
                        near_rel(r.stages[1].branch1.sse, refvals::kStage2Sse1, 1e-3) &&
                        near_rel(r.stages[2].branch0.sse, refvals::kStage3Sse0, 1e-3) &&
                        r.stages[2].branch1.sse <= refvals::kTinySse;
    if (!sse_ok) {
        detail = "branch SSE grid off: stage1 (" + fmt(r.stages[0].branch0.sse) + ", " +
                 fmt(r.stages[0].branch1.sse) + "), stage2 (" + fmt(r.stages[1].branch0.sse) +
                 ", " + fmt(r.stages[1].branch1.sse) + "), stage3 (" +
                 fmt(r.stages[2].branch0.sse) + ", " + fmt(r.stages[2].branch1.sse) + ")";
        return false;
    }
    const auto& completion = r.stages[0].branch0.relaxed_completion;
    if (!completion || completion->size() != 2 ||
        !near_abs((*completion)[0], refvals::kStage1Bit0Completion[0], 1e-5) ||
        !near_abs((*completion)[1], refvals::kStage1Bit0Completion[1], 1e-5)) {
        detail = "stage-1 bit-0 completion off";
        return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// 4. Clean 20x10 instance: all three methods recover the planted vector.
// --------------------------------------------------------------------------

bool criterion4(std::string& detail) {
    const GeneratedProblem g = generate(GeneratorSpec::defaults(Family::paper2));
    const BinaryVector planted(refvals::kPlanted2.begin(), refvals::kPlanted2.end());

    const SolveResult sweep = dpbb_solve(g.problem);
    if (sweep.x != planted) {
        detail = "staged solver missed the planted vector";
        return false;
    }
    const OracleResult oracle = exhaustive_solve(g.problem);
    if (oracle.x != planted || oracle.candidates_evaluated != 1024) {
        detail = "oracle missed the planted vector or wrong candidate count";
        return false;
    }
    const BaselineResult base = direct_pseudo_solve(g.problem);
    if (base.rounded_x != planted) {
        detail = "rounded baseline missed the planted vector";
        return false;
    }
    for (std::size_t i = 0; i < 10; ++i) {
        if (!near_abs(base.real_x[i], static_cast<double>(planted[i]), 1e-3)) {
            detail = "unconstrained solution entry " + std::to_string(i + 1) + " = " +
                     fmt(base.real_x[i]) + " vs " + std::to_string(planted[i]);
            return false;
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 5. Noisy recovery study: staged solver strictly beats rounding.
// --------------------------------------------------------------------------

bool criterion5(std::string& detail) {
    BenchSpec spec;
    spec.family = Family::paper2;
    spec.noise_fractions = {0.2};
    spec.trials_per_point = 100;
    spec.base_seed = 2026;
    spec.methods = {Method::dpbb, Method::baseline};
    const BenchReport report = run_bench(spec);
    const double sweep_rate = report.cells[0].recovery_rate;
    const double rounding_rate = report.cells[1].recovery_rate;
    detail = "staged " + fmt(sweep_rate) + " vs rounding " + fmt(rounding_rate);
    return sweep_rate > rounding_rate;
}

// --------------------------------------------------------------------------
// 6. Oracle dominance over 200 instances.
// --------------------------------------------------------------------------

bool criterion6(std::string& detail) {
    std::mt19937_64 gen(20260819);
    std::size_t count = 0;

    auto dominated = [&](const Problem& p, std::size_t index) {
        const OracleResult oracle = exhaustive_solve(p);
        const SolveResult sweep = dpbb_solve(p);
        if (oracle.sse > sweep.final_sse) {
            detail = "instance " + std::to_string(index) + ": oracle " + fmt(oracle.sse) +
                     " > staged " + fmt(sweep.final_sse);
            return false;
        }
        return true;
    };

    // The two canonical clean instances, where the solutions must coincide.
    for (const Family family : {Family::paper1, Family::paper2}) {
        const GeneratedProblem g = generate(GeneratorSpec::defaults(family));
        const OracleResult oracle = exhaustive_solve(g.problem);
        const SolveResult sweep = dpbb_solve(g.problem);
        if (oracle.x != sweep.x) {
            detail = family_name(family) + ": oracle and staged solutions differ";
            return false;
        }
        if (oracle.sse > sweep.final_sse) {
            detail = family_name(family) + ": oracle SSE above staged SSE";
            return false;
        }
        ++count;
    }

    // 99 noisy family draws.
    for (int trial = 0; trial < 99; ++trial) {
        GeneratorSpec spec =
            GeneratorSpec::defaults(trial % 2 == 0 ? Family::paper1 : Family::paper2);
        std::mt19937_64 pg(gen());
        spec.planted_x = random_bits(pg, family_unknowns(spec.family));
        spec.noise_fraction = 0.1 * static_cast<double>(trial % 4);
        spec.seed = gen();
        const GeneratedProblem g = generate(spec);
        const Problem noisy(g.problem.matrix(), g.noisy_b);
        if (!dominated(noisy, count)) return false;
        ++count;
    }

    // 99 uniform random full-rank instances, n <= 12, m <= 30.
    for (int trial = 0; trial < 99; ++trial) {
        const std::size_t n = 2 + gen() % 11;           // 2..12
        const std::size_t m = n + 1 + gen() % (30 - n);  // n+1..30
        const Matrix a = random_full_rank(gen, m, n);
        const Problem p(a, random_vector(gen, m));
        if (!dominated(p, count)) return false;
        ++count;
    }

    if (count != 200) {
        detail = "only " + std::to_string(count) + " instances checked";
        return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// 7. Pseudo-inverse invariants over 100 random matrices.
// --------------------------------------------------------------------------

bool criterion7(std::string& detail) {
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t cols = 1 + gen() % 10;
        const std::size_t rows = cols + 1 + gen() % (30 - cols);
        const Matrix b = random_full_rank(gen, rows, cols);

        // Left inverse: P B = I within 1e-8.
        const Matrix pb = matmul(pseudo_inverse(b), b);
        for (std::size_t i = 0; i < cols; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                const double want = i == j ? 1.0 : 0.0;
                if (!near_abs(pb(i, j), want, 1e-8)) {
                    detail = "trial " + std::to_string(trial) + ": (PB)(" +
                             std::to_string(i) + "," + std::to_string(j) +
                             ") = " + fmt(pb(i, j));
                    return false;
                }
            }
        }

        // Residual orthogonality: B'(s - B z) ~ 0 relative to |s|.
        const Vector s = random_vector(gen, rows);
        const Vector z = least_squares(b, s);
        const Vector residual = vec_sub(s, matvec(b, z));
        const double gram_residual = max_abs(matvec(transpose(b), residual));
        if (gram_residual > 1e-7 * std::max(1.0, max_abs(s))) {
            detail = "trial " + std::to_string(trial) +
                     ": residual correlation = " + fmt(gram_residual);
            return false;
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 8. Byte-identical reruns of generate, solve, and bench.
// --------------------------------------------------------------------------

struct CliRun {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliRun run_cli(const fs::path& dir, const std::string& args, int index) {
    const fs::path out_path = dir / ("stdout_" + std::to_string(index) + ".txt");
    const std::string command = std::string(BINLSQ_CLI_PATH) + " " + args + " > " +
                                out_path.string() + " 2> /dev/null";
    const int status = std::system(command.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    return r;
}

bool criterion8(std::string& detail) {
    const fs::path root = fs::temp_directory_path() / "binlsq_acceptance";
    fs::remove_all(root);
    const fs::path d1 = root / "run1";
    const fs::path d2 = root / "run2";
    fs::create_directories(d1);
    fs::create_directories(d2);

    const std::string gen_flags = "generate --family paper2 --noise 0.2 --seed 7 --out-dir ";
    if (run_cli(root, gen_flags + d1.string(), 0).exit_code != 0 ||
        run_cli(root, gen_flags + d2.string(), 1).exit_code != 0) {
        detail = "generate run failed";
        return false;
    }
    for (const char* name : {"A.csv", "b.csv", "b_noisy.csv", "x_planted.csv"}) {
        if (slurp(d1 / name) != slurp(d2 / name)) {
            detail = std::string("generate bytes differ: ") + name;
            return false;
        }
    }

    const std::string solve_flags = "solve --trace --matrix " + (d1 / "A.csv").string() +
                                    " --rhs " + (d1 / "b_noisy.csv").string();
    const CliRun s1 = run_cli(root, solve_flags, 2);
    const CliRun s2 = run_cli(root, solve_flags, 3);
    if (s1.exit_code != 0 || s2.exit_code != 0 || s1.out != s2.out || s1.out.empty()) {
        detail = "solve reruns differ or failed";
        return false;
    }

    const std::string bench_flags =
        "bench --family paper2 --noise 0,0.2 --trials 10 --seed 5 --out ";
    if (run_cli(root, bench_flags + (d1 / "bench").string(), 4).exit_code != 0 ||
        run_cli(root, bench_flags + (d2 / "bench").string(), 5).exit_code != 0) {
        detail = "bench run failed";
        return false;
    }
    if (slurp(d1 / "bench.json") != slurp(d2 / "bench.json") ||
        slurp(d1 / "bench.csv") != slurp(d2 / "bench.csv")) {
        detail = "bench bytes differ";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Gate {
        int index;
        std::string title;
        bool (*check)(std::string&);
    };
    const std::vector<Gate> gates = {
        {1, "generator reproduces the 10x3 reference matrix (30 entries, 5e-5)", criterion1},
        {2, "pseudo-inverse reference blocks (2x10 at 5e-5, 1x10 at 5e-6)", criterion2},
        {3, "staged-solver trace: branch SSEs, decisions (1,0,1), completion", criterion3},
        {4, "clean 20x10 instance: all three methods recover the planted vector", criterion4},
        {5, "noisy study: staged recovery beats rounding (100 trials, noise 0.2)", criterion5},
        {6, "oracle SSE never exceeds staged SSE across 200 instances", criterion6},
        {7, "left-inverse and residual-orthogonality invariants (100 matrices)", criterion7},
        {8, "generate, solve, and bench reruns are byte-identical", criterion8},
    };

    for (const Gate& gate : gates) {
        std::string detail;
        bool ok = false;
        try {
            ok = gate.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        report(gate.index, gate.title, ok, detail);
    }

    if (g_failures > 0) {
        std::printf("%d of 8 criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
