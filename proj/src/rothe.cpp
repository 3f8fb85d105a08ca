#include "vofwave/rothe.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vofwave/caputo_weights.hpp"

namespace vofwave {

double ProblemSpec::f_eval(double phi) const {
    if (clamp > 0.0) phi = std::clamp(phi, -clamp, clamp);
    switch (f) {
    case Nonlinearity::Zero: return 0.0;
    case Nonlinearity::LogisticMinus: return phi * (1.0 - phi);
    case Nonlinearity::LogisticPlus: return phi * (1.0 + phi);
    }
    return 0.0;
}

StepContext make_context(const ProblemSpec& spec, int N, int n, int quad_order) {
    if (N < 4) throw std::invalid_argument("make_context: need N >= 4");
    if (n < 2) throw std::invalid_argument("make_context: need n >= 2");
    if (!(spec.b > spec.a)) throw std::invalid_argument("make_context: need b > a");
    if (!(spec.T > 0.0)) throw std::invalid_argument("make_context: need T > 0");
    const double tau = spec.T / n;
    if (!(tau < 1.0)) throw std::invalid_argument("make_context: need tau = T/n < 1");
    if (std::abs(spec.mu.T - spec.T) > 1e-12 * std::max(1.0, spec.T))
        throw std::invalid_argument("make_context: mu profile horizon differs from spec.T");

    // coefficient sign conditions and order bound on a sample grid
    for (int j = 0; j <= 100; ++j) {
        const double t = spec.T * j / 100.0;
        if (!(spec.beta(t) > 0.0))
            throw std::invalid_argument("make_context: beta(t) must stay positive");
        if (spec.rho(t) < 0.0)
            throw std::invalid_argument("make_context: rho(t) must be nonnegative");
        const double m = mu_eval(spec.mu, t);
        if (!(m >= 0.0 && m < 1.0))
            throw std::invalid_argument("make_context: mu(t) must lie in [0, 1)");
    }
    if (spec.phi0) {
        const double scale = std::max(1.0, std::abs(spec.phi0(0.5 * (spec.a + spec.b))));
        if (std::abs(spec.phi0(spec.a)) > 1e-10 * scale ||
            std::abs(spec.phi0(spec.b)) > 1e-10 * scale)
            throw std::invalid_argument("make_context: phi0 must vanish at the endpoints");
    }

    StepContext ctx;
    ctx.spec = spec;
    ctx.basis = Basis{N, spec.a, spec.b};
    ctx.n = n;
    ctx.tau = tau;
    const int q = quad_order > 0 ? quad_order : 2 * N;
    ctx.table = make_chi_table(ctx.basis, gauss_rule(q, spec.a, spec.b));
    ctx.M = mass(ctx.table);
    ctx.S = stiffness(ctx.table);
    return ctx;
}

namespace {

// five-point central first derivative for the H1 projection when phi0_deriv
// is not supplied; the stencil shrinks near the endpoints
std::function<double(double)> fd_derivative(std::function<double(double)> g, double a,
                                            double b) {
    return [g = std::move(g), a, b](double x) {
        double h = 1e-3 * (b - a);
        const double room = 0.4 * std::min(x - a, b - x);
        if (room > 0.0) h = std::min(h, room);
        if (h <= 0.0) h = 1e-3 * (b - a); // endpoint evaluation (not used by Gauss nodes)
        return (g(x - 2 * h) - 8 * g(x - h) + 8 * g(x + h) - g(x + 2 * h)) / (12 * h);
    };
}

} // namespace

SpectralState init(const StepContext& ctx) {
    SpectralState st;
    st.basis = ctx.basis;
    st.tau = ctx.tau;
    st.i = 0;
    const std::size_t dim = std::size_t(ctx.basis.dim());
    std::vector<double> u0(dim, 0.0), v0(dim, 0.0);
    if (ctx.spec.phi0) {
        auto dphi = ctx.spec.phi0_deriv
                        ? ctx.spec.phi0_deriv
                        : fd_derivative(ctx.spec.phi0, ctx.spec.a, ctx.spec.b);
        u0 = project_h1(ctx.basis, dphi);
    }
    if (ctx.spec.psi0) v0 = project_l2(ctx.basis, ctx.spec.psi0);
    st.U.push_back(std::move(u0));
    st.V.push_back(std::move(v0));
    return st;
}

SpectralState init(const ProblemSpec& spec, int N, int n) {
    return init(make_context(spec, N, n));
}

void step(SpectralState& state, const StepContext& ctx, SolveReport* report) {
    const int i = state.i + 1;
    if (i > ctx.n) throw std::logic_error("step: past the final step");
    const double tau = ctx.tau;
    const double t_i = i * tau;
    const std::size_t dim = std::size_t(ctx.basis.dim());

    const double mu_i = mu_eval(ctx.spec.mu, std::min(t_i, ctx.spec.T));
    const double rho_i = ctx.spec.rho(t_i);
    const double beta_i = ctx.spec.beta(t_i);
    const KernelWeights w = weights_mu(i, tau, mu_i);

    const double inv_tau2 = 1.0 / (tau * tau);
    const double d_i = inv_tau2 + rho_i * w.b[std::size_t(i)];

    // history part: (1/tau^2) U_{i-1} - rho_i sum_{q=0}^{i-1} b_q^i U_q, plus
    // the backward-difference carry V_{i-1}/tau, all multiplied by M below
    std::vector<double> hist(dim, 0.0);
    for (int q = 0; q < i; ++q) {
        const double c = -rho_i * w.b[std::size_t(q)];
        if (c == 0.0) continue;
        const auto& Uq = state.U[std::size_t(q)];
        for (std::size_t j = 0; j < dim; ++j) hist[j] += c * Uq[j];
    }
    const auto& Uprev = state.U[std::size_t(i - 1)];
    const auto& Vprev = state.V[std::size_t(i - 1)];
    for (std::size_t j = 0; j < dim; ++j)
        hist[j] += inv_tau2 * Uprev[j] + Vprev[j] / tau;

    // load of Q(., t_i) + f(Phi_{i-1})
    const auto phi_prev = reconstruct_nodes(ctx.table, Uprev);
    const int nn = ctx.table.nn();
    std::vector<double> gv(std::size_t(nn), 0.0);
    for (int j = 0; j < nn; ++j) {
        const double x = ctx.table.rule.nodes[std::size_t(j)];
        double v = ctx.spec.f_eval(phi_prev[std::size_t(j)]);
        if (ctx.spec.source) v += ctx.spec.source(x, t_i);
        gv[std::size_t(j)] = v;
    }
    std::vector<double> rhs = load_vector(ctx.table, gv);
    const auto Mh = ctx.M.multiply(hist);
    for (std::size_t j = 0; j < dim; ++j) rhs[j] += Mh[j];

    const ParitySplitSystem sys = factor(d_i, beta_i, ctx.M, ctx.S);
    std::vector<double> u = sys.solve(rhs);

    if (report) {
        const auto Mu = ctx.M.multiply(u);
        double rnorm = 0.0, res = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double aj = d_i * Mu[j] + beta_i * ctx.S[j] * u[j];
            res = std::max(res, std::abs(aj - rhs[j]));
            rnorm = std::max(rnorm, std::abs(rhs[j]));
        }
        const double rel = res / std::max(rnorm, std::numeric_limits<double>::min());
        report->max_rel_residual = std::max(report->max_rel_residual, rel);
        report->steps = i;
    }

    std::vector<double> v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = (u[j] - Uprev[j]) / tau;
    state.U.push_back(std::move(u));
    state.V.push_back(std::move(v));
    state.i = i;
}

std::pair<SpectralState, SolveReport> run(const ProblemSpec& spec, int N, int n,
                                          int quad_order) {
    const auto t0 = std::chrono::steady_clock::now();
    const StepContext ctx = make_context(spec, N, n, quad_order);
    SpectralState st = init(ctx);
    SolveReport rep;
    st.U.reserve(std::size_t(n) + 1);
    st.V.reserve(std::size_t(n) + 1);
    for (int i = 0; i < n; ++i) step(st, ctx, &rep);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(st), rep};
}

} // namespace vofwave
