#include "vofwave/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace vofwave {

BandedSymMatrix BandedSymMatrix::zero(int dim) {
    BandedSymMatrix m;
    m.dim = dim;
    m.diag.assign(std::size_t(dim), 0.0);
    m.off2.assign(dim > 2 ? std::size_t(dim - 2) : 0, 0.0);
    return m;
}

BandedSymMatrix BandedSymMatrix::identity(int dim) {
    BandedSymMatrix m = zero(dim);
    for (auto& v : m.diag) v = 1.0;
    return m;
}

double BandedSymMatrix::entry(int i, int j) const {
    if (i == j) return diag[std::size_t(i)];
    if (i + 2 == j) return off2[std::size_t(i)];
    if (j + 2 == i) return off2[std::size_t(j)];
    return 0.0;
}

std::vector<double> BandedSymMatrix::multiply(const std::vector<double>& x) const {
    if (int(x.size()) != dim)
        throw std::invalid_argument("BandedSymMatrix::multiply: size mismatch");
    std::vector<double> y(std::size_t(dim), 0.0);
    for (int i = 0; i < dim; ++i) {
        double s = diag[std::size_t(i)] * x[std::size_t(i)];
        if (i >= 2) s += off2[std::size_t(i - 2)] * x[std::size_t(i - 2)];
        if (i + 2 < dim) s += off2[std::size_t(i)] * x[std::size_t(i + 2)];
        y[std::size_t(i)] = s;
    }
    return y;
}

std::vector<std::vector<double>> BandedSymMatrix::dense() const {
    std::vector<std::vector<double>> A(std::size_t(dim),
                                       std::vector<double>(std::size_t(dim), 0.0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) A[std::size_t(i)][std::size_t(j)] = entry(i, j);
    return A;
}

namespace {

// LDL^T of a packed SPD tridiagonal block: on return piv holds D, sub holds
// the unit-lower subdiagonal of L.
void ldlt_tridiag(std::vector<double>& piv, std::vector<double>& sub) {
    const std::size_t m = piv.size();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (!(piv[i] > 0.0))
            throw std::runtime_error("factor: non-positive pivot (indefinite system)");
        sub[i] /= piv[i];
        piv[i + 1] -= sub[i] * sub[i] * piv[i];
    }
    if (m > 0 && !(piv[m - 1] > 0.0))
        throw std::runtime_error("factor: non-positive pivot (indefinite system)");
}

void ldlt_solve_tridiag(const std::vector<double>& piv, const std::vector<double>& sub,
                        std::vector<double>& x) {
    const std::size_t m = x.size();
    for (std::size_t i = 1; i < m; ++i) x[i] -= sub[i - 1] * x[i - 1];
    for (std::size_t i = 0; i < m; ++i) x[i] /= piv[i];
    for (std::size_t i = m; i-- > 1;) x[i - 1] -= sub[i - 1] * x[i];
}

} // namespace

ParitySplitSystem factor(double d, double beta, const BandedSymMatrix& M,
                         const std::vector<double>& S) {
    if (int(S.size()) != M.dim)
        throw std::invalid_argument("factor: diagonal size mismatch");
    ParitySplitSystem sys;
    sys.dim = M.dim;
    const int ne = (M.dim + 1) / 2; // even indices 0, 2, ...
    const int no = M.dim / 2;       // odd indices 1, 3, ...
    sys.even_piv.resize(std::size_t(ne));
    sys.odd_piv.resize(std::size_t(no));
    sys.even_sub.assign(ne > 1 ? std::size_t(ne - 1) : 0, 0.0);
    sys.odd_sub.assign(no > 1 ? std::size_t(no - 1) : 0, 0.0);

    for (int i = 0; i < M.dim; ++i) {
        const double v = d * M.diag[std::size_t(i)] + beta * S[std::size_t(i)];
        if (i % 2 == 0)
            sys.even_piv[std::size_t(i / 2)] = v;
        else
            sys.odd_piv[std::size_t(i / 2)] = v;
    }
    for (int i = 0; i + 2 < M.dim; ++i) {
        const double v = d * M.off2[std::size_t(i)];
        if (i % 2 == 0)
            sys.even_sub[std::size_t(i / 2)] = v;
        else
            sys.odd_sub[std::size_t(i / 2)] = v;
    }

    ldlt_tridiag(sys.even_piv, sys.even_sub);
    ldlt_tridiag(sys.odd_piv, sys.odd_sub);
    return sys;
}

std::vector<double> ParitySplitSystem::solve(const std::vector<double>& rhs) const {
    if (int(rhs.size()) != dim)
        throw std::invalid_argument("ParitySplitSystem::solve: size mismatch");
    std::vector<double> xe(even_piv.size()), xo(odd_piv.size());
    for (int i = 0; i < dim; ++i) {
        if (i % 2 == 0)
            xe[std::size_t(i / 2)] = rhs[std::size_t(i)];
        else
            xo[std::size_t(i / 2)] = rhs[std::size_t(i)];
    }
    ldlt_solve_tridiag(even_piv, even_sub, xe);
    ldlt_solve_tridiag(odd_piv, odd_sub, xo);
    std::vector<double> x(std::size_t(dim), 0.0);
    for (int i = 0; i < dim; ++i)
        x[std::size_t(i)] = i % 2 == 0 ? xe[std::size_t(i / 2)] : xo[std::size_t(i / 2)];
    return x;
}

std::vector<double> solve(const ParitySplitSystem& sys, const std::vector<double>& rhs) {
    return sys.solve(rhs);
}

DenseLU dense_lu(std::vector<std::vector<double>> A) {
    const int n = int(A.size());
    DenseLU f;
    f.dim = n;
    f.perm.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) f.perm[std::size_t(i)] = i;

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(A[std::size_t(k)][std::size_t(k)]);
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(A[std::size_t(i)][std::size_t(k)]);
            if (v > best) { best = v; p = i; }
        }
        if (best == 0.0) throw std::runtime_error("dense_lu: singular matrix");
        if (p != k) {
            std::swap(A[std::size_t(p)], A[std::size_t(k)]);
            std::swap(f.perm[std::size_t(p)], f.perm[std::size_t(k)]);
        }
        const double piv = A[std::size_t(k)][std::size_t(k)];
        for (int i = k + 1; i < n; ++i) {
            const double m = A[std::size_t(i)][std::size_t(k)] / piv;
            A[std::size_t(i)][std::size_t(k)] = m;
            for (int j = k + 1; j < n; ++j)
                A[std::size_t(i)][std::size_t(j)] -= m * A[std::size_t(k)][std::size_t(j)];
        }
    }
    f.lu = std::move(A);
    return f;
}

std::vector<double> lu_solve(const DenseLU& f, std::vector<double> b) {
    const int n = f.dim;
    if (int(b.size()) != n) throw std::invalid_argument("lu_solve: size mismatch");
    std::vector<double> x(std::size_t(n), 0.0);
    for (int i = 0; i < n; ++i) x[std::size_t(i)] = b[std::size_t(f.perm[std::size_t(i)])];
    for (int i = 1; i < n; ++i) {
        double s = x[std::size_t(i)];
        for (int j = 0; j < i; ++j) s -= f.lu[std::size_t(i)][std::size_t(j)] * x[std::size_t(j)];
        x[std::size_t(i)] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[std::size_t(i)];
        for (int j = i + 1; j < n; ++j)
            s -= f.lu[std::size_t(i)][std::size_t(j)] * x[std::size_t(j)];
        x[std::size_t(i)] = s / f.lu[std::size_t(i)][std::size_t(i)];
    }
    return x;
}

} // namespace vofwave
