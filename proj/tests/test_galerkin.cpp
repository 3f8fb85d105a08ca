#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "vofwave/galerkin.hpp"
#include "vofwave/legendre.hpp"

using namespace vofwave;

constexpr double kPi = std::numbers::pi;

TEST_CASE("stiffness: quadrature assembly meets the closed form") {
    for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{-1.0, 1.0}, std::pair{0.5, 3.0}}) {
        Basis basis{18, a, b};
        std::vector<double> S = stiffness(basis);
        REQUIRE(int(S.size()) == basis.dim());
        for (int d = 0; d < basis.dim(); ++d) {
            const double want = 2.0 / (b - a) * (4.0 * d + 6.0);
            CHECK(std::abs(S[size_t(d)] - want) <= 1e-12 * want);
        }
    }
}

TEST_CASE("mass: quadrature assembly meets the closed form") {
    for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{-1.0, 1.0}, std::pair{0.5, 3.0}}) {
        Basis basis{18, a, b};
        BandedSymMatrix M = mass(basis);
        const double len = b - a;
        for (int j = 0; j < basis.dim(); ++j) {
            const double mjj = len * (1.0 / (2.0 * j + 1.0) + 1.0 / (2.0 * j + 5.0));
            CHECK(std::abs(M.diag[size_t(j)] - mjj) <= 1e-12 * mjj);
            if (j + 2 < basis.dim()) {
                const double moff = -len / (2.0 * j + 5.0);
                CHECK(std::abs(M.off2[size_t(j)] - moff) <= 1e-12 * std::abs(moff));
            }
        }
    }
    // the first diagonal entry on the unit interval
    Basis unit{6, 0.0, 1.0};
    CHECK(mass(unit).diag[0] == doctest::Approx(1.2).epsilon(1e-13));
}

TEST_CASE("mass sparsity: any skipped coupling really vanishes") {
    Basis basis{12, 0.0, 1.0};
    ChiTable table = make_chi_table(basis, default_rule(basis));
    const int nn = table.nn();
    for (int d = 0; d < basis.dim(); ++d) {
        for (int j = d + 1; j < basis.dim(); ++j) {
            if (j == d + 2) continue;
            double acc = 0.0;
            for (int q = 0; q < nn; ++q)
                acc += table.rule.weights[size_t(q)] * table.val[size_t(d * nn + q)] *
                       table.val[size_t(j * nn + q)];
            CHECK(std::abs(acc) <= 1e-12);
        }
    }
}

TEST_CASE("default rule has order 2N") {
    Basis basis{11, 0.0, 1.0};
    CHECK(default_rule(basis).order == 22);
    CHECK(int(default_rule(basis).nodes.size()) == 22);
}

TEST_CASE("a finer quadrature rule changes nothing measurable") {
    Basis basis{10, -0.5, 2.0};
    ChiTable t1 = make_chi_table(basis, default_rule(basis));
    ChiTable t2 = make_chi_table(basis, gauss_rule(3 * basis.N + 7, basis.a, basis.b));
    BandedSymMatrix M1 = mass(t1), M2 = mass(t2);
    std::vector<double> S1 = stiffness(t1), S2 = stiffness(t2);
    for (int i = 0; i < basis.dim(); ++i) {
        CHECK(M1.diag[size_t(i)] == doctest::Approx(M2.diag[size_t(i)]).epsilon(1e-13));
        CHECK(S1[size_t(i)] == doctest::Approx(S2[size_t(i)]).epsilon(1e-13));
    }
}

TEST_CASE("load vector of a basis function is a mass-matrix column") {
    Basis basis{10, 0.0, 1.0};
    ChiTable table = make_chi_table(basis, default_rule(basis));
    BandedSymMatrix M = mass(table);
    const int pick = 3;
    std::vector<double> r =
        load_vector(table, [&](double x) { return chi_eval(basis, pick, x); });
    for (int j = 0; j < basis.dim(); ++j)
        CHECK(r[size_t(j)] == doctest::Approx(M.entry(j, pick)).epsilon(1e-13));

    // node-value overload agrees with the callable overload
    std::vector<double> gv(size_t(table.nn()));
    for (int q = 0; q < table.nn(); ++q)
        gv[size_t(q)] = chi_eval(basis, pick, table.rule.nodes[size_t(q)]);
    std::vector<double> r2 = load_vector(table, gv);
    for (int j = 0; j < basis.dim(); ++j)
        CHECK(r2[size_t(j)] == doctest::Approx(r[size_t(j)]).epsilon(1e-15));

    CHECK_THROWS_AS((void)load_vector(table, std::vector<double>{1.0}),
                    std::invalid_argument);
}

TEST_CASE("projections recover representable fields exactly") {
    Basis basis{12, 0.0, 1.0};
    std::vector<double> truth(size_t(basis.dim()), 0.0);
    truth[0] = 0.3;
    truth[3] = -1.2;
    truth[9] = 0.07;

    auto g = [&](double x) { return reconstruct_at(basis, truth, x); };
    std::vector<double> cl2 = project_l2(basis, g);
    for (int i = 0; i < basis.dim(); ++i)
        CHECK(std::abs(cl2[size_t(i)] - truth[size_t(i)]) <= 1e-12);

    auto gd = [&](double x) {
        double acc = 0.0;
        acc += 0.3 * chi_deriv(basis, 0, x);
        acc += -1.2 * chi_deriv(basis, 3, x);
        acc += 0.07 * chi_deriv(basis, 9, x);
        return acc;
    };
    std::vector<double> ch1 = project_h1(basis, gd);
    for (int i = 0; i < basis.dim(); ++i)
        CHECK(std::abs(ch1[size_t(i)] - truth[size_t(i)]) <= 1e-12);
}

TEST_CASE("projection of a smooth field is spectrally accurate") {
    Basis basis{24, 0.0, 1.0};
    ChiTable table = make_chi_table(basis, default_rule(basis));
    auto g = [](double x) { return std::sin(kPi * x); };
    std::vector<double> c = project_l2(basis, g);
    double err = 0.0;
    for (double x : {0.1, 0.37, 0.5, 0.93})
        err = std::max(err, std::abs(reconstruct_at(basis, c, x) - g(x)));
    CHECK(err <= 1e-12);

    std::vector<double> ch = project_h1(basis, [](double x) { return kPi * std::cos(kPi * x); });
    double errh = 0.0;
    for (double x : {0.1, 0.37, 0.5, 0.93})
        errh = std::max(errh, std::abs(reconstruct_at(basis, ch, x) - g(x)));
    CHECK(errh <= 1e-12);
    (void)table;
}

TEST_CASE("reconstruct: batch, nodes, and validation") {
    Basis basis{8, 0.0, 2.0};
    ChiTable table = make_chi_table(basis, default_rule(basis));
    std::vector<double> c(size_t(basis.dim()), 0.0);
    c[1] = 1.0;
    c[4] = -0.5;

    std::vector<double> xs = {0.0, 0.5, 1.1, 2.0};
    std::vector<double> vals = reconstruct(basis, c, xs);
    for (size_t i = 0; i < xs.size(); ++i)
        CHECK(vals[i] == doctest::Approx(reconstruct_at(basis, c, xs[i])).epsilon(1e-15));

    std::vector<double> nv = reconstruct_nodes(table, c);
    for (int q = 0; q < table.nn(); ++q)
        CHECK(nv[size_t(q)] ==
              doctest::Approx(reconstruct_at(basis, c, table.rule.nodes[size_t(q)]))
                  .epsilon(1e-14));

    CHECK_THROWS_AS((void)reconstruct_at(basis, std::vector<double>{1.0}, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)reconstruct_nodes(table, std::vector<double>{1.0}),
                    std::invalid_argument);
}
