#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vofwave/galerkin.hpp"
#include "vofwave/rothe.hpp"

namespace vofwave {

// Caputo derivative of t^2 with the order frozen at the evaluation time:
//   D^{mu} t^2 = 2 t^{2-mu} / Gamma(3-mu)   (Beta-integral identity),
// degenerating to t^2 - 0 at mu = 0.  Valid for 0 <= mu < 1, t >= 0.
double caputo_t2(double mu_t, double t);

// A problem whose source is constructed so that `exact` solves it.  All
// benchmark fields are t^2 * G(x), so the source in closed form is
//   Q = 2 G + rho(t) caputo_t2(mu(t), t) G - beta(t) t^2 G'' - f(t^2 G).
struct ManufacturedSolution {
    std::string name;
    ProblemSpec spec;
    std::function<double(double, double)> exact;
};

// t^2 sin(pi x) on [0,1], rho = beta = 1, f = phi(1 - phi),
// oscillating order 0.2 -> 0.4.
ManufacturedSolution example1();

// t^2 x^2 (1-x)^2 on [0,1], rho = beta = 1, f = phi(1 + phi); variant selects
// the order profile: 1 linear (0.6 -> 0.4), 2 quadratic (0.5 -> 0.8),
// 3 sinusoidal (0.6 with an 0.8-parameter bump).
ManufacturedSolution example2(int variant);

// t^2 sin(pi x) on [0,1], exponentially growing damping weight rho(t) = e^t,
// beta = 1, f = phi(1 + phi), piecewise-constant order 1/4 | 3/4 switching
// at t = 1/2.
ManufacturedSolution example3();

// Truncated eigenfunction series for the constant-order problem with
// rho = beta = 1, f = 0, Q = 0 on [0, L]:
//   Phi(x,t) = sum_{j=1..K} X_j(x) [ (phi0, X_j) T1_j(t) + (psi0, X_j) T2_j(t) ],
//   X_j = sqrt(2/L) sin(j pi x / L),  kappa_j = (j pi / L)^2.
// Modes with negligible data coefficients are skipped.
double series_solution(int K, double mu, const std::function<double(double)>& phi0,
                       const std::function<double(double)>& psi0, double L, double x,
                       double t);

// ||reconstruct(coeffs) - g||_{L2} by quadrature.
double l2_diff(const ChiTable& table, const std::vector<double>& coeffs,
               const std::function<double(double)>& g);

// E = max_{1<=i<=n} ||reconstruct(U_i) - exact(., i tau)||_{L2}.
double error_L2(const Basis& basis, const std::vector<std::vector<double>>& U,
                const std::function<double(double, double)>& exact, double tau);

} // namespace vofwave
