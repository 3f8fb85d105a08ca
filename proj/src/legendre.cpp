#include "vofwave/legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vofwave {

namespace {

void check_xhat(double xhat) {
    if (std::abs(xhat) > 1.0 + 1e-9)
        throw std::domain_error("legendre: point outside [-1, 1]");
}

void check_index(const Basis& basis, int r) {
    if (r < 0 || r > basis.N - 2)
        throw std::out_of_range("basis index outside 0..N-2");
}

// L_q and L_{q-1} at x (for Newton on the roots of L_q).
void legendre_pair(int q, double x, double& lq, double& lqm1) {
    double p0 = 1.0, p1 = x;
    if (q == 0) { lq = p0; lqm1 = 0.0; return; }
    for (int r = 2; r <= q; ++r) {
        const double p2 = ((2.0 * r - 1.0) * x * p1 - (r - 1.0) * p0) / r;
        p0 = p1;
        p1 = p2;
    }
    lq = p1;
    lqm1 = p0;
}

} // namespace

std::vector<double> legendre_eval_upto(int n, double xhat) {
    if (n < 0) throw std::invalid_argument("legendre_eval_upto: negative degree");
    check_xhat(xhat);
    std::vector<double> L(std::size_t(n) + 1);
    L[0] = 1.0;
    if (n >= 1) L[1] = xhat;
    for (int r = 2; r <= n; ++r)
        L[std::size_t(r)] =
            ((2.0 * r - 1.0) * xhat * L[std::size_t(r - 1)] - (r - 1.0) * L[std::size_t(r - 2)]) / r;
    return L;
}

double chi_eval(const Basis& basis, int r, double x) {
    check_index(basis, r);
    const auto L = legendre_eval_upto(r + 2, basis.xhat(x));
    return L[std::size_t(r)] - L[std::size_t(r) + 2];
}

double chi_deriv(const Basis& basis, int r, double x) {
    check_index(basis, r);
    const auto L = legendre_eval_upto(r + 1, basis.xhat(x));
    return -(2.0 * r + 3.0) * L[std::size_t(r) + 1] * 2.0 / (basis.b - basis.a);
}

std::vector<double> chi_all(const Basis& basis, double x) {
    const auto L = legendre_eval_upto(basis.N, basis.xhat(x));
    std::vector<double> out(std::size_t(basis.dim()));
    for (int r = 0; r <= basis.N - 2; ++r)
        out[std::size_t(r)] = L[std::size_t(r)] - L[std::size_t(r) + 2];
    return out;
}

std::vector<double> chi_deriv_all(const Basis& basis, double x) {
    const auto L = legendre_eval_upto(basis.N - 1, basis.xhat(x));
    const double jac = 2.0 / (basis.b - basis.a);
    std::vector<double> out(std::size_t(basis.dim()));
    for (int r = 0; r <= basis.N - 2; ++r)
        out[std::size_t(r)] = -(2.0 * r + 3.0) * L[std::size_t(r) + 1] * jac;
    return out;
}

QuadratureRule gauss_rule(int order, double a, double b) {
    if (order < 1) throw std::invalid_argument("gauss_rule: order must be >= 1");
    const int q = order;
    QuadratureRule rule;
    rule.order = q;
    rule.nodes.resize(std::size_t(q));
    rule.weights.resize(std::size_t(q));

    // Roots of L_q on [-1, 1]: Newton iteration from Chebyshev guesses,
    // solved for the positive half and mirrored for exact symmetry.
    for (int i = 1; i <= (q + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i - 0.25) / (q + 0.5));
        double lq = 0.0, lqm1 = 0.0, dlq = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(q, x, lq, lqm1);
            dlq = q * (x * lq - lqm1) / (x * x - 1.0);
            const double dx = lq / dlq;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        if (2 * i == q + 1) x = 0.0; // middle root of an odd rule is exact
        legendre_pair(q, x, lq, lqm1);
        dlq = q * (x * lq - lqm1) / (x * x - 1.0); // roots are interior, x^2 < 1
        const double w = 2.0 / ((1.0 - x * x) * dlq * dlq);
        rule.nodes[std::size_t(q - i)] = x;
        rule.nodes[std::size_t(i - 1)] = -x;
        rule.weights[std::size_t(q - i)] = w;
        rule.weights[std::size_t(i - 1)] = w;
    }

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        rule.nodes[j] = mid + half * rule.nodes[j];
        rule.weights[j] *= half;
    }
    return rule;
}

} // namespace vofwave
