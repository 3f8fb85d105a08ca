#pragma once

#include <stdexcept>
#include <string>

namespace vofwave {

// Gamma function, Lanczos approximation (g=7, 9 coefficients) with reflection
// for x < 0.5.  Relative accuracy ~1e-14 on (0, 50].  Poles (x a non-positive
// integer) raise std::domain_error.
double gamma_fn(double x);

// log(Gamma(x)) for x > 0.
double log_gamma(double x);

// sign of Gamma(x) together with log|Gamma(x)|, defined for any non-pole x.
// Returns {0, -inf} at a pole, i.e. 1/Gamma == 0 there.
struct SignedLogGamma {
    int sign;      // -1, 0 (pole), +1
    double logabs; // log|Gamma(x)|; -inf at a pole
};
SignedLogGamma signed_log_gamma(double x);

// Parameters of the two-term Mittag-Leffler-type series
//   E(z1, z2) = sum_{k1,k2 >= 0} C(k1+k2, k1) z1^k1 z2^k2
//                                / Gamma(beta + alpha1*k1 + alpha2*k2).
// The damped wave modes use alpha1 = 2, alpha2 = 2 - mu.
struct MLParams {
    double alpha1 = 2.0;
    double alpha2 = 1.5;
    double beta = 1.0;

    static MLParams wave(double mu, double beta) { return {2.0, 2.0 - mu, beta}; }
};

// Thrown when the series has not met the tolerance within the diagonal cap;
// carries the partial sum accumulated so far.
struct MLNonConvergence : std::runtime_error {
    double partial_sum;
    MLNonConvergence(const std::string& what, double partial)
        : std::runtime_error(what), partial_sum(partial) {}
};

// Evaluate the series above by diagonal (total-degree) summation.
// Terms are built in log space; terms whose Gamma argument is a non-positive
// integer are skipped (their reciprocal Gamma vanishes).  Convergence is
// declared after three consecutive diagonal sums below tol; the declared
// envelope is |z1|, |z2| <= 150 (std::domain_error outside it).
double ml2(const MLParams& params, double z1, double z2, double tol = 1e-14);

// Time modes of the single-mode damped wave ODE with constant order mu:
//   T'' + D^mu T + kappa T = 0,
// T1 with T1(0)=1, T1'(0)=0 and T2 with T2(0)=0, T2'(0)=1:
//   T1(t) = 1 - kappa t^2 E_{(2,2-mu),3}(-kappa t^2, -t^{2-mu})
//   T2(t) = t E_{(2,2-mu),2}(-kappa t^2, -t^{2-mu})
//   T1'(t) = -kappa t E_{(2,2-mu),2}(-kappa t^2, -t^{2-mu})
//   T2'(t) = E_{(2,2-mu),1}(-kappa t^2, -t^{2-mu})
double mode_T1(double kappa, double mu, double t);
double mode_T2(double kappa, double mu, double t);
double mode_T1_prime(double kappa, double mu, double t);
double mode_T2_prime(double kappa, double mu, double t);

} // namespace vofwave
