#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vofwave/rothe.hpp"

namespace vofwave {

// Flat key = value configuration (see README for the key list and defaults).
struct RunConfig {
    std::string problem = "example1";

    int N = 50;
    int n = 1600;
    std::vector<double> taus; // time-ladder steps (conv-time)
    std::vector<int> Ns;      // truncation ladder (conv-space)
    double tau = 0.000625;    // fixed step for conv-space
    int quad_order = 0;       // 0 = default 2N
    int threads = 0;          // 0 = hardware concurrency
    std::string out;

    // custom / single-mode problem fields
    double domain_a = 0.0, domain_b = 1.0;
    double T = 1.0;
    std::string mu_kind = "constant";
    double mu_start = 0.5, mu_end = 0.5;
    std::vector<double> mu_knots_t, mu_knots_mu;
    std::string rho_kind = "constant";
    double rho_value = 1.0, rho_rate = 0.0;
    std::string beta_kind = "constant";
    double beta_value = 1.0, beta_rate = 0.0;
    std::string f_name = "zero"; // zero | logistic- | logistic+
    double clamp = 0.0;
    std::string phi0_kind = "zero"; // zero | sine | parabola
    std::string psi0_kind = "zero";
    int series_modes = 1; // oracle modes when the series solution applies

    // solve-subcommand field dump
    int dump_nx = 101;
    int dump_every = 0; // 0 = n/10
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// The problem a config names, with its exact solution when one is known
// (manufactured benchmarks; the eigenfunction series when the custom or
// single-mode problem is series-solvable).
struct BuiltProblem {
    std::string name;
    ProblemSpec spec;
    std::function<double(double, double)> exact; // empty when unknown
};

BuiltProblem build_problem(const RunConfig& cfg);

// Empirical orders: C-O between two step counts, A-O at one truncation.
// Non-positive errors yield NaN (undefined-order marker).
double co_rate(double E1, double E2, double M1, double M2);
double ao_rate(double E, int N);

struct TableRow {
    double param = 0.0; // tau or N
    double error = 0.0;
    double order = 0.0; // NaN = blank
    bool failed = false;
};

struct ConvergenceTable {
    std::string problem;
    std::string kind;  // "time" or "space"
    std::string fixed; // e.g. "N=50" or "tau=0.000625"
    std::vector<TableRow> rows;
    double wall_seconds = 0.0; // in-memory diagnostic; never serialised
};

// Sweep the time ladder cfg.taus at fixed cfg.N (C-O between adjacent rows,
// first blank), or the truncation ladder cfg.Ns at fixed cfg.tau (A-O per
// row).  Rows run concurrently across cfg.threads; row results and order are
// deterministic.  A failed run marks its row and the table is still emitted.
ConvergenceTable run_time_table(const RunConfig& cfg);
ConvergenceTable run_space_table(const RunConfig& cfg);

// Deterministic CSV: '#' metadata lines, header `param,error,order`, errors
// with 6 significant digits, orders with 3 decimals, blank for undefined.
std::string to_csv(const ConvergenceTable& table);
ConvergenceTable parse_csv(const std::string& text);

} // namespace vofwave
