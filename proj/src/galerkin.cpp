#include "vofwave/galerkin.hpp"

#include <stdexcept>

namespace vofwave {

ChiTable make_chi_table(const Basis& basis, QuadratureRule rule) {
    ChiTable t;
    t.basis = basis;
    t.rule = std::move(rule);
    const int dim = basis.dim();
    const int nn = t.nn();
    t.val.resize(std::size_t(dim) * std::size_t(nn));
    t.dval.resize(std::size_t(dim) * std::size_t(nn));
    for (int j = 0; j < nn; ++j) {
        const auto v = chi_all(basis, t.rule.nodes[std::size_t(j)]);
        const auto dv = chi_deriv_all(basis, t.rule.nodes[std::size_t(j)]);
        for (int r = 0; r < dim; ++r) {
            t.val[std::size_t(r) * std::size_t(nn) + std::size_t(j)] = v[std::size_t(r)];
            t.dval[std::size_t(r) * std::size_t(nn) + std::size_t(j)] = dv[std::size_t(r)];
        }
    }
    return t;
}

QuadratureRule default_rule(const Basis& basis) {
    return gauss_rule(2 * basis.N, basis.a, basis.b);
}

std::vector<double> stiffness(const ChiTable& table) {
    const int dim = table.basis.dim();
    const int nn = table.nn();
    std::vector<double> s(std::size_t(dim), 0.0);
    for (int r = 0; r < dim; ++r) {
        const double* row = table.dval.data() + std::size_t(r) * std::size_t(nn);
        double acc = 0.0;
        for (int j = 0; j < nn; ++j) acc += table.rule.weights[std::size_t(j)] * row[j] * row[j];
        s[std::size_t(r)] = acc;
    }
    return s;
}

std::vector<double> stiffness(const Basis& basis) {
    return stiffness(make_chi_table(basis, default_rule(basis)));
}

BandedSymMatrix mass(const ChiTable& table) {
    const int dim = table.basis.dim();
    const int nn = table.nn();
    BandedSymMatrix m = BandedSymMatrix::zero(dim);
    for (int r = 0; r < dim; ++r) {
        const double* row = table.val.data() + std::size_t(r) * std::size_t(nn);
        double acc = 0.0;
        for (int j = 0; j < nn; ++j) acc += table.rule.weights[std::size_t(j)] * row[j] * row[j];
        m.diag[std::size_t(r)] = acc;
        if (r + 2 < dim) {
            const double* row2 = table.val.data() + std::size_t(r + 2) * std::size_t(nn);
            acc = 0.0;
            for (int j = 0; j < nn; ++j)
                acc += table.rule.weights[std::size_t(j)] * row[j] * row2[j];
            m.off2[std::size_t(r)] = acc;
        }
    }
    return m;
}

BandedSymMatrix mass(const Basis& basis) {
    return mass(make_chi_table(basis, default_rule(basis)));
}

std::vector<double> load_vector(const ChiTable& table, const std::vector<double>& g_at_nodes) {
    const int dim = table.basis.dim();
    const int nn = table.nn();
    if (int(g_at_nodes.size()) != nn)
        throw std::invalid_argument("load_vector: node-value count mismatch");
    std::vector<double> r(std::size_t(dim), 0.0);
    for (int i = 0; i < dim; ++i) {
        const double* row = table.val.data() + std::size_t(i) * std::size_t(nn);
        double acc = 0.0;
        for (int j = 0; j < nn; ++j)
            acc += table.rule.weights[std::size_t(j)] * row[j] * g_at_nodes[std::size_t(j)];
        r[std::size_t(i)] = acc;
    }
    return r;
}

std::vector<double> load_vector(const ChiTable& table, const std::function<double(double)>& g) {
    std::vector<double> gv(table.rule.nodes.size());
    for (std::size_t j = 0; j < gv.size(); ++j) gv[j] = g(table.rule.nodes[j]);
    return load_vector(table, gv);
}

std::vector<double> project_l2(const Basis& basis, const std::function<double(double)>& g) {
    const ChiTable table = make_chi_table(basis, default_rule(basis));
    const auto r = load_vector(table, g);
    const auto M = mass(table);
    const std::vector<double> zeros(std::size_t(basis.dim()), 0.0);
    return factor(1.0, 0.0, M, zeros).solve(r);
}

std::vector<double> project_h1(const Basis& basis,
                               const std::function<double(double)>& g_deriv) {
    const ChiTable table = make_chi_table(basis, default_rule(basis));
    const auto s = stiffness(table);
    const int dim = basis.dim();
    const int nn = table.nn();
    std::vector<double> c(std::size_t(dim), 0.0);
    for (int i = 0; i < dim; ++i) {
        const double* row = table.dval.data() + std::size_t(i) * std::size_t(nn);
        double acc = 0.0;
        for (int j = 0; j < nn; ++j)
            acc += table.rule.weights[std::size_t(j)] * row[j] *
                   g_deriv(table.rule.nodes[std::size_t(j)]);
        c[std::size_t(i)] = acc / s[std::size_t(i)];
    }
    return c;
}

double reconstruct_at(const Basis& basis, const std::vector<double>& coeffs, double x) {
    if (int(coeffs.size()) != basis.dim())
        throw std::invalid_argument("reconstruct: coefficient count mismatch");
    const auto v = chi_all(basis, x);
    double s = 0.0;
    for (std::size_t r = 0; r < coeffs.size(); ++r) s += coeffs[r] * v[r];
    return s;
}

std::vector<double> reconstruct(const Basis& basis, const std::vector<double>& coeffs,
                                const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) out[j] = reconstruct_at(basis, coeffs, xs[j]);
    return out;
}

std::vector<double> reconstruct_nodes(const ChiTable& table, const std::vector<double>& coeffs) {
    const int dim = table.basis.dim();
    const int nn = table.nn();
    if (int(coeffs.size()) != dim)
        throw std::invalid_argument("reconstruct_nodes: coefficient count mismatch");
    std::vector<double> out(std::size_t(nn), 0.0);
    for (int r = 0; r < dim; ++r) {
        const double cr = coeffs[std::size_t(r)];
        if (cr == 0.0) continue;
        const double* row = table.val.data() + std::size_t(r) * std::size_t(nn);
        for (int j = 0; j < nn; ++j) out[std::size_t(j)] += cr * row[j];
    }
    return out;
}

} // namespace vofwave
