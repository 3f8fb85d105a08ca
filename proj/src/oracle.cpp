#include "vofwave/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vofwave/special_functions.hpp"

namespace vofwave {

namespace {
constexpr double kPi = std::numbers::pi;
}

double caputo_t2(double mu_t, double t) {
    if (!(mu_t >= 0.0 && mu_t < 1.0))
        throw std::domain_error("caputo_t2: order must lie in [0, 1)");
    if (!(t >= 0.0)) throw std::domain_error("caputo_t2: t must be nonnegative");
    if (t == 0.0) return 0.0;
    if (mu_t == 0.0) return t * t;
    return 2.0 * std::pow(t, 2.0 - mu_t) / gamma_fn(3.0 - mu_t);
}

namespace {

// assemble the manufactured problem for Phi = t^2 G(x)
ManufacturedSolution make_separable(std::string name, ProblemSpec spec,
                                    std::function<double(double)> G,
                                    std::function<double(double)> Gxx) {
    ManufacturedSolution ms;
    ms.name = std::move(name);
    ms.spec = std::move(spec);
    const ProblemSpec& s = ms.spec; // captured copies below outlive this frame
    auto mu = s.mu;
    auto rho = s.rho;
    auto beta = s.beta;
    auto f = s.f;
    auto fev = [f](double phi) {
        switch (f) {
        case ProblemSpec::Nonlinearity::Zero: return 0.0;
        case ProblemSpec::Nonlinearity::LogisticMinus: return phi * (1.0 - phi);
        case ProblemSpec::Nonlinearity::LogisticPlus: return phi * (1.0 + phi);
        }
        return 0.0;
    };
    ms.spec.source = [mu, rho, beta, fev, G, Gxx](double x, double t) {
        const double g = G(x);
        const double phi = t * t * g;
        return 2.0 * g + rho(t) * caputo_t2(mu_eval(mu, std::min(t, mu.T)), t) * g -
               beta(t) * t * t * Gxx(x) - fev(phi);
    };
    ms.exact = [G](double x, double t) { return t * t * G(x); };
    return ms;
}

double sin_pi(double x) { return std::sin(kPi * x); }
double sin_pi_xx(double x) { return -kPi * kPi * std::sin(kPi * x); }
double bump(double x) { return x * x * (1.0 - x) * (1.0 - x); }
double bump_xx(double x) { return 2.0 - 12.0 * x + 12.0 * x * x; }

} // namespace

ManufacturedSolution example1() {
    ProblemSpec spec;
    spec.a = 0.0;
    spec.b = 1.0;
    spec.T = 1.0;
    spec.rho = CoefficientFn::constant(1.0);
    spec.beta = CoefficientFn::constant(1.0);
    spec.mu = MuProfile::oscillating(0.2, 0.4, 1.0);
    spec.f = ProblemSpec::Nonlinearity::LogisticMinus;
    return make_separable("example1", std::move(spec), sin_pi, sin_pi_xx);
}

ManufacturedSolution example2(int variant) {
    ProblemSpec spec;
    spec.a = 0.0;
    spec.b = 1.0;
    spec.T = 1.0;
    spec.rho = CoefficientFn::constant(1.0);
    spec.beta = CoefficientFn::constant(1.0);
    spec.f = ProblemSpec::Nonlinearity::LogisticPlus;
    std::string name;
    switch (variant) {
    case 1:
        spec.mu = MuProfile::linear(0.6, 0.4, 1.0);
        name = "example2-I";
        break;
    case 2:
        spec.mu = MuProfile::quadratic(0.5, 0.8, 1.0);
        name = "example2-II";
        break;
    case 3:
        spec.mu = MuProfile::sinusoidal(0.6, 0.8, 1.0);
        name = "example2-III";
        break;
    default:
        throw std::invalid_argument("example2: variant must be 1, 2 or 3");
    }
    return make_separable(std::move(name), std::move(spec), bump, bump_xx);
}

ManufacturedSolution example3() {
    ProblemSpec spec;
    spec.a = 0.0;
    spec.b = 1.0;
    spec.T = 1.0;
    spec.rho = CoefficientFn::exponential(1.0, 1.0);
    spec.beta = CoefficientFn::constant(1.0);
    spec.mu = MuProfile::piecewise_step(0.25, 0.75, 1.0);
    spec.f = ProblemSpec::Nonlinearity::LogisticPlus;
    return make_separable("example3", std::move(spec), sin_pi, sin_pi_xx);
}

double series_solution(int K, double mu, const std::function<double(double)>& phi0,
                       const std::function<double(double)>& psi0, double L, double x,
                       double t) {
    if (K < 1) throw std::invalid_argument("series_solution: need K >= 1");
    if (!(L > 0.0)) throw std::invalid_argument("series_solution: need L > 0");
    const QuadratureRule rule = gauss_rule(std::max(48, 4 * K + 16), 0.0, L);
    const double norm = std::sqrt(2.0 / L);

    double sum = 0.0;
    for (int j = 1; j <= K; ++j) {
        double cj = 0.0, dj = 0.0;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double xi = rule.nodes[q];
            const double Xj = norm * std::sin(j * kPi * xi / L);
            if (phi0) cj += rule.weights[q] * phi0(xi) * Xj;
            if (psi0) dj += rule.weights[q] * psi0(xi) * Xj;
        }
        if (std::abs(cj) < 1e-13 && std::abs(dj) < 1e-13) continue;
        const double kappa = (j * kPi / L) * (j * kPi / L);
        double mode = 0.0;
        if (std::abs(cj) >= 1e-13) mode += cj * mode_T1(kappa, mu, t);
        if (std::abs(dj) >= 1e-13) mode += dj * mode_T2(kappa, mu, t);
        sum += norm * std::sin(j * kPi * x / L) * mode;
    }
    return sum;
}

double l2_diff(const ChiTable& table, const std::vector<double>& coeffs,
               const std::function<double(double)>& g) {
    const auto rec = reconstruct_nodes(table, coeffs);
    double acc = 0.0;
    for (std::size_t j = 0; j < rec.size(); ++j) {
        const double d = rec[j] - g(table.rule.nodes[j]);
        acc += table.rule.weights[j] * d * d;
    }
    return std::sqrt(acc);
}

double error_L2(const Basis& basis, const std::vector<std::vector<double>>& U,
                const std::function<double(double, double)>& exact, double tau) {
    if (U.size() < 2) throw std::invalid_argument("error_L2: empty trajectory");
    const ChiTable table = make_chi_table(basis, default_rule(basis));
    double worst = 0.0;
    for (std::size_t i = 1; i < U.size(); ++i) {
        const double t = double(i) * tau;
        const auto rec = reconstruct_nodes(table, U[i]);
        double acc = 0.0;
        for (std::size_t j = 0; j < rec.size(); ++j) {
            const double d = rec[j] - exact(table.rule.nodes[j], t);
            acc += table.rule.weights[j] * d * d;
        }
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

} // namespace vofwave
