#pragma once

#include <vector>

namespace vofwave {

// Symmetric matrix with nonzeros only on the main diagonal and the second
// super/subdiagonal (the sparsity of the boundary-adapted Legendre mass
// matrix: indices couple only within a parity class).
struct BandedSymMatrix {
    int dim = 0;
    std::vector<double> diag; // dim entries
    std::vector<double> off2; // dim - 2 entries; off2[i] = A(i, i+2)

    static BandedSymMatrix zero(int dim);
    static BandedSymMatrix identity(int dim);

    double entry(int i, int j) const;
    std::vector<double> multiply(const std::vector<double>& x) const;
    std::vector<std::vector<double>> dense() const;
};

// LDL^T factorisation of A = d*M + beta*S (M banded symmetric as above, S
// diagonal), split into its even-index and odd-index tridiagonal blocks.
// Both blocks are SPD for d > 0, beta >= 0 and SPD M; a non-positive pivot
// raises std::runtime_error (indefinite system).
struct ParitySplitSystem {
    int dim = 0;
    // packed per parity class: pivots d_i and unit-lower subdiagonal l_i
    std::vector<double> even_piv, even_sub;
    std::vector<double> odd_piv, odd_sub;

    std::vector<double> solve(const std::vector<double>& rhs) const;
};

ParitySplitSystem factor(double d, double beta, const BandedSymMatrix& M,
                         const std::vector<double>& S);

std::vector<double> solve(const ParitySplitSystem& sys, const std::vector<double>& rhs);

// Dense LU with partial pivoting; kept as an equivalence oracle for the
// banded path (and for synthetic test systems), not used by the stepper.
struct DenseLU {
    int dim = 0;
    std::vector<std::vector<double>> lu;
    std::vector<int> perm;
};

DenseLU dense_lu(std::vector<std::vector<double>> A); // throws on singular
std::vector<double> lu_solve(const DenseLU& f, std::vector<double> b);

} // namespace vofwave
