#pragma once

#include <vector>

namespace vofwave {

// Named variable-order profiles mu(t) on [0, T].
//
//   Constant      mu(t) = mu0
//   Linear        mu(t) = muT + (mu0 - muT)(1 - t/T)
//   Quadratic     mu(t) = muT + (mu0 - muT)(1 - (t/T)^2)
//   Oscillating   mu(t) = muT + (mu0 - muT)(1 - t/T - sin(2 pi (1 - t/T)) / (2 pi))
//                 (monotone between the endpoints: the factor's derivative is
//                  (cos(2 pi (1 - t/T)) - 1)/T <= 0)
//   Sinusoidal    mu(t) = muT + (mu0 - muT)(1 - sin(2 pi (1 - t/T)) / (2 pi))
//                 (periodic bump: equals mu0 at both endpoints, sup is
//                  mu0 + |mu0 - muT| / (2 pi))
//   PiecewiseStep mu(t) = mu0 for t <= T/2, muT for t > T/2
//                 (right-continuous at 0: mu(0) = mu0)
//   Tabulated     linear interpolation through user-supplied (t, mu) knots
enum class MuKind {
    Constant,
    Linear,
    Quadratic,
    Oscillating,
    Sinusoidal,
    PiecewiseStep,
    Tabulated,
};

struct MuProfile {
    MuKind kind = MuKind::Constant;
    double mu0 = 0.5; // order at t = 0
    double muT = 0.5; // order at t = T (see per-kind notes above)
    double T = 1.0;   // horizon

    // Tabulated kind only: strictly increasing knots_t spanning [0, T].
    std::vector<double> knots_t;
    std::vector<double> knots_mu;

    static MuProfile constant(double mu, double T = 1.0);
    static MuProfile linear(double mu0, double muT, double T = 1.0);
    static MuProfile quadratic(double mu0, double muT, double T = 1.0);
    static MuProfile oscillating(double mu0, double muT, double T = 1.0);
    static MuProfile sinusoidal(double mu0, double muT, double T = 1.0);
    static MuProfile piecewise_step(double mu0, double muT, double T = 1.0);
    static MuProfile tabulated(std::vector<double> t, std::vector<double> mu);
};

// Evaluate mu(t); t outside [0, T] raises std::domain_error.
double mu_eval(const MuProfile& profile, double t);

// sup_{t in [0,T]} mu(t), in closed form per kind.
double mu_bar(const MuProfile& profile);

// Time-dependent scalar coefficient: value (Constant) or value * exp(rate * t)
// (Exponential).  Used for the damping weight rho(t) and diffusivity beta(t).
struct CoefficientFn {
    enum class Kind { Constant, Exponential };
    Kind kind = Kind::Constant;
    double value = 1.0;
    double rate = 0.0;

    double operator()(double t) const;

    static CoefficientFn constant(double v) { return {Kind::Constant, v, 0.0}; }
    static CoefficientFn exponential(double scale, double rate) {
        return {Kind::Exponential, scale, rate};
    }
};

} // namespace vofwave
