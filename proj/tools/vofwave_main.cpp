// vofwave: experiment driver for the variable-order fractionally damped wave
// solver.  Subcommands: solve, conv-time, conv-space, validate, tables.
//
// Wall-clock timings and solver residuals go to stdout only; emitted CSV
// files are byte-deterministic across runs and thread counts.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vofwave/caputo_weights.hpp"
#include "vofwave/galerkin.hpp"
#include "vofwave/harness.hpp"
#include "vofwave/legendre.hpp"
#include "vofwave/linalg.hpp"
#include "vofwave/oracle.hpp"
#include "vofwave/rothe.hpp"
#include "vofwave/special_functions.hpp"

namespace {

using namespace vofwave;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_table(const ConvergenceTable& table, const std::string& out_path) {
    const std::string csv = to_csv(table);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_file(out_path, csv);
        std::cout << "wrote " << out_path << "\n";
    }
    std::printf("wall time: %.3f s\n", table.wall_seconds);
}

RunConfig load_config(const std::string& path, const std::string& out_override,
                      int threads_override) {
    RunConfig cfg = parse_config_file(path);
    if (!out_override.empty()) cfg.out = out_override;
    if (threads_override >= 0) cfg.threads = threads_override;
    return cfg;
}

int cmd_solve(const RunConfig& cfg, const std::string& dump_path) {
    BuiltProblem prob = build_problem(cfg);
    auto [state, report] = run(prob.spec, cfg.N, cfg.n, cfg.quad_order);
    std::printf("problem: %s\n", prob.name.c_str());
    std::printf("N = %d, n = %d, tau = %.6g\n", cfg.N, cfg.n, state.tau);
    std::printf("steps: %d, wall time: %.3f s, max rel residual: %.3e\n", report.steps,
                report.seconds, report.max_rel_residual);

    Basis basis = state.basis;
    if (prob.exact) {
        const double E = error_L2(basis, state.U, prob.exact, state.tau);
        ChiTable table = make_chi_table(basis, default_rule(basis));
        const double T = cfg.n * state.tau;
        auto exact_T = [&](double x) { return prob.exact(x, T); };
        const double e_final = l2_diff(table, state.U.back(), exact_T);
        std::printf("error (max over steps, L2): %.6e\n", E);
        std::printf("error at final time  (L2): %.6e\n", e_final);
    } else {
        std::printf("no reference solution for this problem; skipping error report\n");
    }

    if (!dump_path.empty()) {
        const int nx = std::max(2, cfg.dump_nx);
        int every = cfg.dump_every > 0 ? cfg.dump_every : std::max(1, cfg.n / 10);
        std::vector<double> xs(nx);
        for (int j = 0; j < nx; ++j)
            xs[j] = basis.a + (basis.b - basis.a) * j / double(nx - 1);
        std::ostringstream out;
        out << "# problem = " << prob.name << "\n";
        out << "x,t,phi\n";
        char buf[96];
        for (int i = 0; i <= cfg.n; i += every) {
            const double t = i * state.tau;
            std::vector<double> vals = reconstruct(basis, state.U[i], xs);
            for (int j = 0; j < nx; ++j) {
                std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g\n", xs[j], t, vals[j]);
                out << buf;
            }
        }
        write_file(dump_path, out.str());
        std::printf("wrote field dump: %s\n", dump_path.c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// validate: quick self-checks of the numerical kernels (a light mirror of the
// full test suite, usable on an installed binary).

struct Validator {
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            std::printf("PASS %s\n", name.c_str());
        } else {
            ++failures;
            std::printf("FAIL %s%s%s\n", name.c_str(), detail.empty() ? "" : ": ",
                        detail.c_str());
        }
    }
};

int cmd_validate() {
    Validator v;
    constexpr double kPi = std::numbers::pi;

    { // Gamma recurrence and a pinned value
        double worst = 0.0;
        for (double x = 0.1; x < 10.0; x += 0.1) {
            const double lhs = gamma_fn(x + 1.0);
            const double rhs = x * gamma_fn(x);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        v.check("gamma recurrence", worst < 1e-12, "worst rel diff " + std::to_string(worst));
        v.check("gamma half-integer", std::abs(gamma_fn(0.5) - std::sqrt(kPi)) < 1e-14);
    }

    { // Caputo closed form of t^2
        const double got = caputo_t2(0.5, 1.0);
        const double want = 2.0 / gamma_fn(2.5);
        v.check("caputo t^2 closed form", std::abs(got - want) < 1e-14);
        v.check("caputo order-zero limit", caputo_t2(0.0, 0.5) == 0.25);
    }

    { // kernel weight identities on a few draws
        bool ok = true;
        std::string why;
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> um(0.05, 0.95);
        for (int trial = 0; trial < 24 && ok; ++trial) {
            const int k = 1 + int(rng() % 200);
            const double tau = std::pow(2.0, -4.0 - double(rng() % 8));
            KernelWeights w = weights_mu(k, tau, um(rng));
            double sum = 0.0;
            for (double bq : w.b) sum += bq;
            if (std::abs(sum) > 1e-10 * std::abs(w.b[k])) { ok = false; why = "sum != 0"; }
            for (int q = 0; q < k && ok; ++q)
                if (w.b[q] > 0.0) { ok = false; why = "history weight positive"; }
            for (int q = 1; q < k && ok; ++q)
                if (w.a[q] < w.a[q - 1]) { ok = false; why = "a not monotone"; }
        }
        v.check("kernel weight identities", ok, why);
    }

    { // Gauss-rule polynomial exactness
        double worst = 0.0;
        for (int q = 1; q <= 16; ++q) {
            QuadratureRule r = gauss_rule(q, 0.0, 1.0);
            for (int p = 0; p <= 2 * q - 1; ++p) {
                double I = 0.0;
                for (size_t j = 0; j < r.nodes.size(); ++j)
                    I += r.weights[j] * std::pow(r.nodes[j], p);
                worst = std::max(worst, std::abs(I - 1.0 / (p + 1)));
            }
        }
        v.check("quadrature polynomial exactness", worst < 1e-12,
                "worst abs diff " + std::to_string(worst));
    }

    { // closed-form mass/stiffness vs quadrature assembly
        double worst = 0.0;
        for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{-2.0, 3.0}}) {
            Basis basis{16, a, b};
            ChiTable table = make_chi_table(basis, default_rule(basis));
            std::vector<double> S = stiffness(table);
            BandedSymMatrix M = mass(table);
            const double len = b - a;
            for (int d = 0; d < basis.dim(); ++d) {
                worst = std::max(worst, std::abs(S[d] - 2.0 / len * (4.0 * d + 6.0)));
                const double mjj = len * (1.0 / (2.0 * d + 1.0) + 1.0 / (2.0 * d + 5.0));
                worst = std::max(worst, std::abs(M.diag[d] - mjj) / mjj);
                if (d + 2 < basis.dim()) {
                    const double moff = -len / (2.0 * d + 5.0);
                    worst = std::max(worst, std::abs(M.off2[d] - moff) / std::abs(moff));
                }
            }
        }
        v.check("mass/stiffness closed forms", worst < 1e-12,
                "worst diff " + std::to_string(worst));
    }

    { // banded parity solver vs dense LU on synthetic systems
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> ud(0.5, 2.0);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const int dim = 3 + int(rng() % 30);
            BandedSymMatrix M = BandedSymMatrix::zero(dim);
            std::vector<double> S(dim);
            for (int i = 0; i < dim; ++i) { M.diag[i] = 2.0 + ud(rng); S[i] = ud(rng); }
            for (int i = 0; i + 2 < dim; ++i) M.off2[i] = ud(rng) - 1.25; // dominated
            const double d = ud(rng) * 10.0, be = ud(rng);
            std::vector<double> rhs(dim);
            for (int i = 0; i < dim; ++i) rhs[i] = ud(rng) - 1.25;
            std::vector<double> x1 = factor(d, be, M, S).solve(rhs);
            auto A = M.dense();
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) A[i][j] *= d;
                A[i][i] += be * S[i];
            }
            std::vector<double> x2 = lu_solve(dense_lu(A), rhs);
            for (int i = 0; i < dim; ++i) worst = std::max(worst, std::abs(x1[i] - x2[i]));
        }
        v.check("banded vs dense solve", worst < 1e-11, "worst diff " + std::to_string(worst));
    }

    { // series spot values
        const double got = ml2(MLParams::wave(0.5, 3.0), -1.0, -1.0);
        v.check("series spot value", std::abs(got - 0.38773821424153296) < 1e-13);
        const double t2 = mode_T2(kPi * kPi, 0.5, 0.5);
        v.check("mode spot value", std::abs(t2 - 0.282099413673718419) < 1e-13);
    }

    { // scheme vs eigenfunction series, single mode
        ProblemSpec spec;
        spec.T = 0.5;
        spec.mu = MuProfile::constant(0.5, 0.5);
        spec.phi0 = [=](double x) { return std::sin(kPi * x); };
        spec.phi0_deriv = [=](double x) { return kPi * std::cos(kPi * x); };
        auto [state, report] = run(spec, 16, 64);
        (void)report;
        Basis basis = state.basis;
        ChiTable table = make_chi_table(basis, default_rule(basis));
        const double amp = mode_T1(kPi * kPi, 0.5, 0.5);
        const double err =
            l2_diff(table, state.U.back(), [&](double x) { return amp * std::sin(kPi * x); });
        v.check("scheme vs series (single mode)", err < 2e-2,
                "error " + std::to_string(err));
    }

    std::printf("%s (%d failure%s)\n", v.failures == 0 ? "ALL PASS" : "FAILURES", v.failures,
                v.failures == 1 ? "" : "s");
    return v.failures == 0 ? 0 : 1;
}

int cmd_tables(const std::string& outdir, int threads) {
    const std::vector<std::string> problems = {"example1", "example2-I", "example2-II",
                                               "example2-III", "example3"};
    for (const std::string& name : problems) {
        RunConfig cfg;
        cfg.problem = name;
        cfg.N = 50;
        cfg.taus = {0.01, 0.005, 0.0025, 0.00125, 0.000625};
        cfg.Ns = {5, 10, 20, 30, 40, 50};
        cfg.tau = 0.000625;
        if (threads >= 0) cfg.threads = threads;

        ConvergenceTable tt = run_time_table(cfg);
        emit_table(tt, outdir + "/" + name + "-time.csv");
        ConvergenceTable ts = run_space_table(cfg);
        emit_table(ts, outdir + "/" + name + "-space.csv");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"variable-order fractionally damped wave equation: "
                 "Galerkin spectral solver and convergence harness"};
    app.require_subcommand(1);

    std::string config_path, out_path, dump_path, outdir = ".";
    int threads = -1; // -1 = honour the config file

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", config_path, "path to key = value config file");
        if (needs_config) opt->required();
        sub->add_option("--out", out_path, "output file (default: config `out`, else stdout)");
        sub->add_option("--threads", threads, "worker threads for sweeps (0 = all cores)");
    };

    CLI::App* solve = app.add_subcommand("solve", "single run; prints diagnostics");
    add_common(solve, true);
    solve->add_option("--dump", dump_path, "write x,t,phi samples to this CSV file");

    CLI::App* conv_time =
        app.add_subcommand("conv-time", "temporal-convergence table over the `taus` ladder");
    add_common(conv_time, true);

    CLI::App* conv_space =
        app.add_subcommand("conv-space", "spatial-saturation table over the `Ns` ladder");
    add_common(conv_space, true);

    CLI::App* validate =
        app.add_subcommand("validate", "run the built-in numerical self-checks");
    (void)validate;

    CLI::App* tables =
        app.add_subcommand("tables", "emit all five benchmark tables (time + space)");
    tables->add_option("--outdir", outdir, "directory for the CSV files (default: .)");
    tables->add_option("--threads", threads, "worker threads for sweeps (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            return cmd_solve(load_config(config_path, out_path, threads), dump_path);
        }
        if (conv_time->parsed()) {
            RunConfig cfg = load_config(config_path, out_path, threads);
            emit_table(run_time_table(cfg), cfg.out);
            return 0;
        }
        if (conv_space->parsed()) {
            RunConfig cfg = load_config(config_path, out_path, threads);
            emit_table(run_space_table(cfg), cfg.out);
            return 0;
        }
        if (validate->parsed()) return cmd_validate();
        if (tables->parsed()) return cmd_tables(outdir, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
