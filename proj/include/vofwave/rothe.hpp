#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "vofwave/galerkin.hpp"
#include "vofwave/legendre.hpp"
#include "vofwave/linalg.hpp"
#include "vofwave/profiles.hpp"

namespace vofwave {

// The continuous problem on (a,b) x (0,T]:
//   Phi_tt + rho(t) D^{mu(t)} Phi = beta(t) Phi_xx + f(Phi) + Q(x,t),
//   Phi(a,.) = Phi(b,.) = 0,  Phi(.,0) = phi0,  Phi_t(.,0) = psi0.
struct ProblemSpec {
    double a = 0.0;
    double b = 1.0;
    double T = 1.0;
    CoefficientFn rho = CoefficientFn::constant(1.0);  // rho(t) >= 0
    CoefficientFn beta = CoefficientFn::constant(1.0); // beta(t) > 0
    MuProfile mu = MuProfile::constant(0.5);

    enum class Nonlinearity { Zero, LogisticMinus, LogisticPlus };
    Nonlinearity f = Nonlinearity::Zero; // 0, phi(1-phi), phi(1+phi)

    std::function<double(double, double)> source; // Q(x, t); empty = 0
    std::function<double(double)> phi0;           // empty = 0
    std::function<double(double)> phi0_deriv;     // d/dx phi0; empty = finite-difference fallback
    std::function<double(double)> psi0;           // empty = 0

    // Optional |phi| cap applied inside f (off when 0); the logistic
    // nonlinearities are not globally Lipschitz.
    double clamp = 0.0;

    double f_eval(double phi) const;
};

// Immutable per-(spec, N, n) precomputation shared by all steps.
struct StepContext {
    ProblemSpec spec;
    Basis basis;
    int n = 0;
    double tau = 0.0;
    ChiTable table;        // at the Galerkin quadrature rule
    BandedSymMatrix M;     // mass
    std::vector<double> S; // stiffness diagonal
};

// quad_order 0 selects the default 2N rule.  Validates N >= 4, n >= 2,
// tau = T/n < 1, coefficient sign conditions on a sample grid, and that
// phi0 vanishes at the endpoints.
StepContext make_context(const ProblemSpec& spec, int N, int n, int quad_order = 0);

struct SolveReport {
    int steps = 0;
    double max_rel_residual = 0.0; // max over steps of ||A u - r||_inf / ||r||_inf
    double seconds = 0.0;
};

// Coefficient trajectory.  U[q] are the Galerkin coefficients at t_q; V[q]
// is the backward difference at step q, with V[0] the L2 projection of psi0
// and V[q] = (U[q] - U[q-1])/tau for q >= 1.
struct SpectralState {
    Basis basis;
    double tau = 0.0;
    int i = 0;
    std::vector<std::vector<double>> U;
    std::vector<std::vector<double>> V;
};

// U_0 = H1 projection of phi0, V_0 = L2 projection of psi0.
SpectralState init(const StepContext& ctx);
SpectralState init(const ProblemSpec& spec, int N, int n);

// Advance one step: with i the new index, mu_i/rho_i/beta_i sampled at t_i,
// d_i = 1/tau^2 + rho_i b_i^i, solve
//   (d_i M + beta_i S) U_i = load(Q_i + f(Phi_{i-1}))
//                          + M [ (1/tau^2) U_{i-1} - rho_i sum_{q<i} b_q^i U_q
//                              + V_{i-1}/tau ].
void step(SpectralState& state, const StepContext& ctx, SolveReport* report = nullptr);

// init + n steps; wall time and residual diagnostics in the report.
std::pair<SpectralState, SolveReport> run(const ProblemSpec& spec, int N, int n,
                                          int quad_order = 0);

} // namespace vofwave
