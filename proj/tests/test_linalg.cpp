#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "vofwave/galerkin.hpp"
#include "vofwave/legendre.hpp"
#include "vofwave/linalg.hpp"

using namespace vofwave;

namespace {

// random system with the mass-matrix sparsity, diagonally dominant within
// each parity class so that it is safely positive definite
struct SynthSystem {
    BandedSymMatrix M;
    std::vector<double> S;
    double d = 1.0, beta = 0.0;
    std::vector<double> rhs;
};

SynthSystem make_system(std::mt19937& rng, bool allow_beta_zero) {
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    SynthSystem sys;
    const int dim = 3 + int(rng() % 40);
    sys.M = BandedSymMatrix::zero(dim);
    sys.S.resize(size_t(dim));
    for (int i = 0; i < dim; ++i) {
        sys.M.diag[size_t(i)] = 2.0 + ud(rng);
        sys.S[size_t(i)] = 0.5 + 1.5 * ud(rng);
    }
    for (int i = 0; i + 2 < dim; ++i) sys.M.off2[size_t(i)] = 1.6 * (ud(rng) - 0.5);
    sys.d = 0.1 + 10.0 * ud(rng);
    sys.beta = (allow_beta_zero && rng() % 4 == 0) ? 0.0 : 2.0 * ud(rng);
    sys.rhs.resize(size_t(dim));
    for (double& v : sys.rhs) v = 2.0 * ud(rng) - 1.0;
    return sys;
}

std::vector<std::vector<double>> assemble_dense(const SynthSystem& s) {
    auto A = s.M.dense();
    const int dim = s.M.dim;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) A[size_t(i)][size_t(j)] *= s.d;
        A[size_t(i)][size_t(i)] += s.beta * s.S[size_t(i)];
    }
    return A;
}

} // namespace

TEST_CASE("banded matrix: entry, multiply, dense round-trip") {
    BandedSymMatrix M = BandedSymMatrix::zero(5);
    M.diag = {2, 3, 4, 5, 6};
    M.off2 = {-1, 0.5, -0.25};

    CHECK(M.entry(0, 0) == 2.0);
    CHECK(M.entry(0, 2) == -1.0);
    CHECK(M.entry(2, 0) == -1.0);
    CHECK(M.entry(0, 1) == 0.0);
    CHECK(M.entry(0, 4) == 0.0);

    std::vector<double> x = {1, -1, 2, 0.5, 3};
    std::vector<double> y = M.multiply(x);
    auto A = M.dense();
    for (int i = 0; i < 5; ++i) {
        double want = 0.0;
        for (int j = 0; j < 5; ++j) want += A[size_t(i)][size_t(j)] * x[size_t(j)];
        CHECK(y[size_t(i)] == doctest::Approx(want).epsilon(1e-15));
    }
    CHECK_THROWS_AS((void)M.multiply(std::vector<double>{1.0, 2.0}), std::invalid_argument);

    BandedSymMatrix I = BandedSymMatrix::identity(4);
    CHECK(I.entry(2, 2) == 1.0);
    CHECK(I.entry(0, 2) == 0.0);
}

TEST_CASE("parity factorisation solves identity-like systems exactly") {
    BandedSymMatrix I = BandedSymMatrix::identity(6);
    std::vector<double> S(6, 0.0);
    std::vector<double> rhs = {1, 2, 3, 4, 5, 6};
    std::vector<double> x = factor(1.0, 0.0, I, S).solve(rhs);
    for (int i = 0; i < 6; ++i) CHECK(x[size_t(i)] == doctest::Approx(rhs[size_t(i)]).epsilon(1e-15));
}

TEST_CASE("parity solve agrees with dense partial-pivot elimination") {
    std::mt19937 rng(31337u);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        SynthSystem s = make_system(rng, true);
        std::vector<double> x1 = factor(s.d, s.beta, s.M, s.S).solve(s.rhs);
        std::vector<double> x2 = lu_solve(dense_lu(assemble_dense(s)), s.rhs);
        double scale = 0.0;
        for (double v : x2) scale = std::max(scale, std::abs(v));
        for (size_t i = 0; i < x1.size(); ++i)
            worst = std::max(worst, std::abs(x1[i] - x2[i]) / std::max(scale, 1e-30));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("parity solve on the actual Galerkin matrices") {
    Basis basis{14, 0.0, 1.0};
    BandedSymMatrix M = mass(basis);
    std::vector<double> S = stiffness(basis);
    std::vector<double> rhs(size_t(basis.dim()));
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = std::cos(double(i));

    for (auto [d, beta] : {std::pair{1.0, 0.0}, std::pair{1.0, 1.0}, std::pair{1.0e4, 2.5}}) {
        std::vector<double> x1 = factor(d, beta, M, S).solve(rhs);
        SynthSystem s{M, S, d, beta, rhs};
        std::vector<double> x2 = lu_solve(dense_lu(assemble_dense(s)), rhs);
        for (size_t i = 0; i < x1.size(); ++i)
            CHECK(x1[i] == doctest::Approx(x2[i]).epsilon(1e-11));
    }
}

TEST_CASE("factorisation verifies positivity") {
    // d M + beta S == 0: every pivot vanishes
    BandedSymMatrix I = BandedSymMatrix::identity(5);
    std::vector<double> Sneg(5, -1.0);
    CHECK_THROWS_AS((void)factor(1.0, 1.0, I, Sneg), std::runtime_error);

    // indefinite M (strong negative coupling dominates a diagonal entry)
    BandedSymMatrix M = BandedSymMatrix::identity(5);
    M.off2 = {-3.0, -3.0, -3.0};
    std::vector<double> S0(5, 0.0);
    CHECK_THROWS_AS((void)factor(1.0, 0.0, M, S0), std::runtime_error);

    CHECK_THROWS_AS((void)factor(1.0, 1.0, I, std::vector<double>{1.0}),
                    std::invalid_argument);
}

TEST_CASE("solve validates dimensions") {
    BandedSymMatrix I = BandedSymMatrix::identity(4);
    std::vector<double> S(4, 1.0);
    ParitySplitSystem f = factor(1.0, 1.0, I, S);
    CHECK_THROWS_AS((void)f.solve(std::vector<double>{1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)solve(f, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("dense LU: pivoting handles zero leading entries") {
    std::vector<std::vector<double>> A = {{0.0, 1.0}, {1.0, 0.0}};
    DenseLU f = dense_lu(A);
    std::vector<double> x = lu_solve(f, {3.0, 7.0});
    CHECK(x[0] == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("dense LU: known 3x3 system") {
    std::vector<std::vector<double>> A = {{2, 1, -1}, {-3, -1, 2}, {-2, 1, 2}};
    std::vector<double> x = lu_solve(dense_lu(A), {8, -11, -3});
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(x[2] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("dense LU: singular matrix is rejected") {
    std::vector<std::vector<double>> A = {{1.0, 2.0}, {2.0, 4.0}};
    CHECK_THROWS_AS((void)dense_lu(A), std::runtime_error);
    DenseLU f = dense_lu(std::vector<std::vector<double>>{{1.0, 0.0}, {0.0, 1.0}});
    CHECK_THROWS_AS((void)lu_solve(f, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("parity split leaves the classes decoupled") {
    // rhs supported on one parity class yields a solution on that class only
    std::mt19937 rng(99u);
    SynthSystem s = make_system(rng, false);
    const int dim = s.M.dim;
    std::vector<double> rhs(size_t(dim), 0.0);
    for (int i = 0; i < dim; i += 2) rhs[size_t(i)] = 1.0; // even class only
    std::vector<double> x = factor(s.d, s.beta, s.M, s.S).solve(rhs);
    for (int i = 1; i < dim; i += 2) CHECK(x[size_t(i)] == 0.0);
}
