#include "vofwave/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vofwave/oracle.hpp"

namespace vofwave {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_double_list(const std::string& v) {
    std::string tmp = v;
    for (auto& c : tmp)
        if (c == ',') c = ' ';
    std::istringstream is(tmp);
    std::vector<double> out;
    double x;
    while (is >> x) out.push_back(x);
    return out;
}

std::vector<int> parse_int_list(const std::string& v) {
    std::vector<int> out;
    for (double x : parse_double_list(v)) out.push_back(int(std::lround(x)));
    return out;
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "problem") cfg.problem = val;
        else if (key == "N") cfg.N = std::stoi(val);
        else if (key == "n") cfg.n = std::stoi(val);
        else if (key == "taus") cfg.taus = parse_double_list(val);
        else if (key == "Ns") cfg.Ns = parse_int_list(val);
        else if (key == "tau") cfg.tau = std::stod(val);
        else if (key == "quad.order") cfg.quad_order = std::stoi(val);
        else if (key == "threads") cfg.threads = std::stoi(val);
        else if (key == "out") cfg.out = val;
        else if (key == "domain.a") cfg.domain_a = std::stod(val);
        else if (key == "domain.b") cfg.domain_b = std::stod(val);
        else if (key == "T") cfg.T = std::stod(val);
        else if (key == "mu.kind") cfg.mu_kind = val;
        else if (key == "mu.start") cfg.mu_start = std::stod(val);
        else if (key == "mu.end") cfg.mu_end = std::stod(val);
        else if (key == "mu.knots.t") cfg.mu_knots_t = parse_double_list(val);
        else if (key == "mu.knots.mu") cfg.mu_knots_mu = parse_double_list(val);
        else if (key == "rho.kind") cfg.rho_kind = val;
        else if (key == "rho.value") cfg.rho_value = std::stod(val);
        else if (key == "rho.rate") cfg.rho_rate = std::stod(val);
        else if (key == "beta.kind") cfg.beta_kind = val;
        else if (key == "beta.value") cfg.beta_value = std::stod(val);
        else if (key == "beta.rate") cfg.beta_rate = std::stod(val);
        else if (key == "f") cfg.f_name = val;
        else if (key == "clamp") cfg.clamp = std::stod(val);
        else if (key == "phi0.kind") cfg.phi0_kind = val;
        else if (key == "psi0.kind") cfg.psi0_kind = val;
        else if (key == "series.modes") cfg.series_modes = std::stoi(val);
        else if (key == "dump.nx") cfg.dump_nx = std::stoi(val);
        else if (key == "dump.every") cfg.dump_every = std::stoi(val);
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

namespace {

MuProfile build_mu(const RunConfig& cfg) {
    const std::string& k = cfg.mu_kind;
    if (k == "constant") return MuProfile::constant(cfg.mu_start, cfg.T);
    if (k == "linear") return MuProfile::linear(cfg.mu_start, cfg.mu_end, cfg.T);
    if (k == "quadratic") return MuProfile::quadratic(cfg.mu_start, cfg.mu_end, cfg.T);
    if (k == "oscillating") return MuProfile::oscillating(cfg.mu_start, cfg.mu_end, cfg.T);
    if (k == "sinusoidal") return MuProfile::sinusoidal(cfg.mu_start, cfg.mu_end, cfg.T);
    if (k == "piecewise") return MuProfile::piecewise_step(cfg.mu_start, cfg.mu_end, cfg.T);
    if (k == "tabulated") return MuProfile::tabulated(cfg.mu_knots_t, cfg.mu_knots_mu);
    throw std::invalid_argument("unknown mu.kind '" + k + "'");
}

CoefficientFn build_coeff(const std::string& kind, double value, double rate,
                          const char* which) {
    if (kind == "constant") return CoefficientFn::constant(value);
    if (kind == "exponential") return CoefficientFn::exponential(value, rate);
    throw std::invalid_argument(std::string("unknown ") + which + ".kind '" + kind + "'");
}

ProblemSpec::Nonlinearity build_f(const std::string& name) {
    if (name == "zero") return ProblemSpec::Nonlinearity::Zero;
    if (name == "logistic-") return ProblemSpec::Nonlinearity::LogisticMinus;
    if (name == "logistic+") return ProblemSpec::Nonlinearity::LogisticPlus;
    throw std::invalid_argument("unknown f '" + name + "'");
}

// named initial fields on [a, b], all vanishing at the endpoints
void build_field(const std::string& kind, double a, double b,
                 std::function<double(double)>& g, std::function<double(double)>& dg) {
    const double L = b - a;
    if (kind == "zero") {
        g = {};
        dg = {};
    } else if (kind == "sine") {
        g = [a, L](double x) { return std::sin(std::numbers::pi * (x - a) / L); };
        dg = [a, L](double x) {
            return std::numbers::pi / L * std::cos(std::numbers::pi * (x - a) / L);
        };
    } else if (kind == "parabola") {
        g = [a, b](double x) { return (x - a) * (b - x); };
        dg = [a, b](double x) { return a + b - 2.0 * x; };
    } else {
        throw std::invalid_argument("unknown initial-field kind '" + kind + "'");
    }
}

BuiltProblem from_manufactured(ManufacturedSolution ms) {
    return {std::move(ms.name), std::move(ms.spec), std::move(ms.exact)};
}

} // namespace

BuiltProblem build_problem(const RunConfig& cfg) {
    const std::string& p = cfg.problem;
    if (p == "example1") return from_manufactured(example1());
    if (p == "example2-I") return from_manufactured(example2(1));
    if (p == "example2-II") return from_manufactured(example2(2));
    if (p == "example2-III") return from_manufactured(example2(3));
    if (p == "example3") return from_manufactured(example3());

    if (p == "single-mode") {
        BuiltProblem bp;
        bp.name = p;
        ProblemSpec s;
        s.a = cfg.domain_a;
        s.b = cfg.domain_b;
        s.T = cfg.T;
        s.rho = CoefficientFn::constant(1.0);
        s.beta = CoefficientFn::constant(1.0);
        s.mu = MuProfile::constant(cfg.mu_start, cfg.T);
        s.f = ProblemSpec::Nonlinearity::Zero;
        std::function<double(double)> g, dg;
        build_field("sine", s.a, s.b, g, dg);
        s.phi0 = g;
        s.phi0_deriv = dg;
        const double a = s.a, L = s.b - s.a, mu = cfg.mu_start;
        const int K = std::max(1, cfg.series_modes);
        const auto phi0_local = [L](double x) { return std::sin(std::numbers::pi * x / L); };
        bp.exact = [K, mu, L, a, phi0_local](double x, double t) {
            return series_solution(K, mu, phi0_local, {}, L, x - a, t);
        };
        bp.spec = std::move(s);
        return bp;
    }

    if (p == "custom") {
        BuiltProblem bp;
        bp.name = p;
        ProblemSpec s;
        s.a = cfg.domain_a;
        s.b = cfg.domain_b;
        s.T = cfg.T;
        s.rho = build_coeff(cfg.rho_kind, cfg.rho_value, cfg.rho_rate, "rho");
        s.beta = build_coeff(cfg.beta_kind, cfg.beta_value, cfg.beta_rate, "beta");
        s.mu = build_mu(cfg);
        s.f = build_f(cfg.f_name);
        s.clamp = cfg.clamp;
        std::function<double(double)> g, dg;
        build_field(cfg.phi0_kind, s.a, s.b, g, dg);
        s.phi0 = g;
        s.phi0_deriv = dg;
        std::function<double(double)> h, dh;
        build_field(cfg.psi0_kind, s.a, s.b, h, dh);
        s.psi0 = h;

        // series-solvable custom problems get the eigenfunction oracle
        const bool series_ok = s.f == ProblemSpec::Nonlinearity::Zero && !s.source &&
                               s.mu.kind == MuKind::Constant &&
                               s.rho.kind == CoefficientFn::Kind::Constant &&
                               s.rho.value == 1.0 &&
                               s.beta.kind == CoefficientFn::Kind::Constant &&
                               s.beta.value == 1.0;
        if (series_ok && (s.phi0 || s.psi0)) {
            const double a = s.a, L = s.b - s.a, mu = s.mu.mu0;
            const int K = std::max(1, cfg.series_modes);
            auto g0 = s.phi0, h0 = s.psi0;
            std::function<double(double)> gl, hl;
            if (g0) gl = [g0, a](double x) { return g0(x + a); };
            if (h0) hl = [h0, a](double x) { return h0(x + a); };
            bp.exact = [K, mu, L, a, gl, hl](double x, double t) {
                return series_solution(K, mu, gl, hl, L, x - a, t);
            };
        }
        bp.spec = std::move(s);
        return bp;
    }

    throw std::invalid_argument("unknown problem '" + p + "'");
}

double co_rate(double E1, double E2, double M1, double M2) {
    if (!(E1 > 0.0) || !(E2 > 0.0) || !(M1 > 0.0) || !(M2 > 0.0) || M1 == M2) return kNaN;
    return std::abs(std::log(E1 / E2)) / std::abs(std::log(M2 / M1));
}

double ao_rate(double E, int N) {
    if (!(E > 0.0) || N <= 1) return kNaN;
    return std::log(E) / std::log(double(N));
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? int(hc) : 1;
}

// run jobs 0..count-1 with at most `threads` concurrently; results land in
// caller-owned slots, so ordering stays deterministic
void run_jobs(std::size_t count, int threads, const std::function<void(std::size_t)>& job) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::size_t next = 0;
    while (next < count) {
        std::vector<std::future<void>> wave;
        for (int k = 0; k < threads && next < count; ++k, ++next)
            wave.push_back(std::async(std::launch::async, job, next));
        for (auto& f : wave) f.get();
    }
}

std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

ConvergenceTable run_time_table(const RunConfig& cfg) {
    if (cfg.taus.empty())
        throw std::invalid_argument("run_time_table: no taus given");
    for (double t : cfg.taus)
        if (!(t > 0.0 && t < 1.0))
            throw std::invalid_argument("run_time_table: each tau must lie in (0, 1)");
    if (cfg.N < 4) throw std::invalid_argument("run_time_table: need N >= 4");

    const BuiltProblem bp = build_problem(cfg);
    if (!bp.exact)
        throw std::invalid_argument("run_time_table: problem has no exact solution");

    ConvergenceTable table;
    table.problem = bp.name;
    table.kind = "time";
    table.fixed = "N=" + std::to_string(cfg.N);
    table.rows.resize(cfg.taus.size());

    const auto t0 = std::chrono::steady_clock::now();
    auto job = [&](std::size_t idx) {
        const double tau = cfg.taus[idx];
        const int n = int(std::lround(bp.spec.T / tau));
        TableRow row{tau, kNaN, kNaN, false};
        try {
            auto [st, rep] = run(bp.spec, cfg.N, n, cfg.quad_order);
            row.error = error_L2(st.basis, st.U, bp.exact, st.tau);
        } catch (...) {
            row.failed = true;
        }
        table.rows[idx] = row;
    };
    run_jobs(table.rows.size(), resolve_threads(cfg.threads), job);

    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const auto& prev = table.rows[i - 1];
        auto& cur = table.rows[i];
        if (prev.failed || cur.failed) continue;
        const double M1 = std::lround(bp.spec.T / prev.param);
        const double M2 = std::lround(bp.spec.T / cur.param);
        cur.order = co_rate(prev.error, cur.error, M1, M2);
    }
    table.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return table;
}

ConvergenceTable run_space_table(const RunConfig& cfg) {
    if (cfg.Ns.empty())
        throw std::invalid_argument("run_space_table: no Ns given");
    for (int N : cfg.Ns)
        if (N < 4) throw std::invalid_argument("run_space_table: each N must be >= 4");
    if (!(cfg.tau > 0.0 && cfg.tau < 1.0))
        throw std::invalid_argument("run_space_table: tau must lie in (0, 1)");

    const BuiltProblem bp = build_problem(cfg);
    if (!bp.exact)
        throw std::invalid_argument("run_space_table: problem has no exact solution");

    ConvergenceTable table;
    table.problem = bp.name;
    table.kind = "space";
    table.fixed = "tau=" + format_sig6(cfg.tau);
    table.rows.resize(cfg.Ns.size());

    const int n = int(std::lround(bp.spec.T / cfg.tau));
    const auto t0 = std::chrono::steady_clock::now();
    auto job = [&](std::size_t idx) {
        const int N = cfg.Ns[idx];
        TableRow row{double(N), kNaN, kNaN, false};
        try {
            auto [st, rep] = run(bp.spec, N, n, cfg.quad_order);
            row.error = error_L2(st.basis, st.U, bp.exact, st.tau);
            row.order = ao_rate(row.error, N);
        } catch (...) {
            row.failed = true;
        }
        table.rows[idx] = row;
    };
    run_jobs(table.rows.size(), resolve_threads(cfg.threads), job);
    table.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return table;
}

std::string to_csv(const ConvergenceTable& table) {
    std::string s;
    s += "# problem = " + table.problem + "\n";
    s += "# kind = " + table.kind + "\n";
    s += "# fixed = " + table.fixed + "\n";
    s += "param,error,order\n";
    for (const auto& r : table.rows) {
        s += format_sig6(r.param);
        s += ',';
        s += r.failed ? "nan" : format_sig6(r.error);
        s += ',';
        if (!r.failed && !std::isnan(r.order)) s += format_fixed3(r.order);
        s += '\n';
    }
    return s;
}

ConvergenceTable parse_csv(const std::string& text) {
    ConvergenceTable table;
    std::istringstream is(text);
    std::string line;
    bool seen_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = trim(line.substr(1, eq - 1));
            const std::string val = trim(line.substr(eq + 1));
            if (key == "problem") table.problem = val;
            else if (key == "kind") table.kind = val;
            else if (key == "fixed") table.fixed = val;
            continue;
        }
        if (!seen_header) {
            if (trim(line) != "param,error,order")
                throw std::invalid_argument("parse_csv: bad header line");
            seen_header = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("parse_csv: malformed row");
        TableRow row;
        row.param = std::stod(line.substr(0, c1));
        const std::string err = trim(line.substr(c1 + 1, c2 - c1 - 1));
        const std::string ord = trim(line.substr(c2 + 1));
        if (err == "nan") {
            row.failed = true;
            row.error = kNaN;
        } else {
            row.error = std::stod(err);
        }
        row.order = ord.empty() ? kNaN : std::stod(ord);
        table.rows.push_back(row);
    }
    if (!seen_header) throw std::invalid_argument("parse_csv: missing header");
    return table;
}

} // namespace vofwave
