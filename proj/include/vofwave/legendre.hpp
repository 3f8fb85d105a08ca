#pragma once

#include <vector>

namespace vofwave {

// Boundary-adapted Legendre basis on [a, b]:
//   chi_r(x) = L_r(xhat) - L_{r+2}(xhat),  xhat = (2x - b - a)/(b - a),
// for r = 0..N-2; every chi_r vanishes at both endpoints.
struct Basis {
    int N = 2;      // truncation; number of basis functions is N - 1
    double a = 0.0;
    double b = 1.0;

    int dim() const { return N - 1; }
    double xhat(double x) const { return (2.0 * x - b - a) / (b - a); }
};

// L_0..L_n at xhat via the three-term recurrence; requires |xhat| <= 1
// (a hair of rounding slack is tolerated).
std::vector<double> legendre_eval_upto(int n, double xhat);

double chi_eval(const Basis& basis, int r, double x);

// d/dx chi_r(x) = -(2r + 3) L_{r+1}(xhat) * 2/(b - a)
// (from L'_{r+2} - L'_r = (2r + 3) L_{r+1}).
double chi_deriv(const Basis& basis, int r, double x);

// All chi_r(x) (resp. derivatives) for r = 0..N-2 in one recurrence pass.
std::vector<double> chi_all(const Basis& basis, double x);
std::vector<double> chi_deriv_all(const Basis& basis, double x);

// Gauss-Legendre rule mapped affinely to [a, b]; exact for polynomials of
// degree <= 2*order - 1.  Nodes ascend; the node set is exactly symmetric
// about the midpoint (mirrored in construction, not re-solved).
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_rule(int order, double a, double b);

} // namespace vofwave
