#pragma once

#include <functional>
#include <vector>

#include "vofwave/legendre.hpp"
#include "vofwave/linalg.hpp"

namespace vofwave {

// Basis values tabulated at the nodes of one quadrature rule; the workhorse
// for assembly, load vectors and error norms.  Row-major: val[r*nn + j] is
// chi_r at node j.
struct ChiTable {
    Basis basis;
    QuadratureRule rule;
    std::vector<double> val;
    std::vector<double> dval;

    int nn() const { return int(rule.nodes.size()); }
};

ChiTable make_chi_table(const Basis& basis, QuadratureRule rule);

// Default rule for all Galerkin integrals: order 2N (over-integration keeps
// the quadratic nonlinearity alias-free).
QuadratureRule default_rule(const Basis& basis);

// Stiffness integrals  s_d = int chi_d' chi_d' dx  (the matrix is diagonal:
// chi_r' is proportional to L_{r+1}); assembled by quadrature.
std::vector<double> stiffness(const ChiTable& table);
std::vector<double> stiffness(const Basis& basis);

// Mass integrals  m_dj = int chi_d chi_j dx; couplings exist only at j = d
// and j = d + 2 (parity + orthogonality), assembled by quadrature.
BandedSymMatrix mass(const ChiTable& table);
BandedSymMatrix mass(const Basis& basis);

// Load vector r_j = int g chi_j dx by quadrature, g given at the rule nodes
// or as a callable.
std::vector<double> load_vector(const ChiTable& table, const std::vector<double>& g_at_nodes);
std::vector<double> load_vector(const ChiTable& table, const std::function<double(double)>& g);

// L2 projection: solve M c = r with r_j = int g chi_j dx.
std::vector<double> project_l2(const Basis& basis, const std::function<double(double)>& g);

// H1(-seminorm) projection of a field vanishing at the endpoints: with the
// stiffness diagonal, c_j = (int g' chi_j' dx) / s_j.  Takes the derivative.
std::vector<double> project_h1(const Basis& basis,
                               const std::function<double(double)>& g_deriv);

// Pointwise sum  sum_r coeffs[r] chi_r(x).
double reconstruct_at(const Basis& basis, const std::vector<double>& coeffs, double x);
std::vector<double> reconstruct(const Basis& basis, const std::vector<double>& coeffs,
                                const std::vector<double>& xs);
// Same, at the table's quadrature nodes (uses the tabulated values).
std::vector<double> reconstruct_nodes(const ChiTable& table, const std::vector<double>& coeffs);

} // namespace vofwave
