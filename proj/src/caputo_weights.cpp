#include "vofwave/caputo_weights.hpp"

#include <cmath>
#include <stdexcept>

#include "vofwave/special_functions.hpp"

namespace vofwave {

KernelWeights weights_mu(int k, double tau, double mu_k) {
    if (k < 1) throw std::invalid_argument("weights: step index must be >= 1");
    if (!(tau > 0.0)) throw std::invalid_argument("weights: step size must be positive");
    if (!(mu_k >= 0.0 && mu_k < 1.0))
        throw std::invalid_argument("weights: order must lie in [0, 1)");

    KernelWeights w;
    w.k = k;
    w.mu_k = mu_k;
    w.tau = tau;
    w.a.resize(std::size_t(k));
    w.b.resize(std::size_t(k) + 1);

    const double rg = 1.0 / gamma_fn(1.0 - mu_k);
    for (int q = 1; q <= k; ++q) {
        // t_k - t_{q-1} = (k - q + 1) tau
        w.a[std::size_t(q - 1)] = std::pow(double(k - q + 1) * tau, -mu_k) * rg;
    }
    w.b[0] = -w.a[0];
    for (int q = 1; q < k; ++q)
        w.b[std::size_t(q)] = w.a[std::size_t(q - 1)] - w.a[std::size_t(q)];
    w.b[std::size_t(k)] = w.a[std::size_t(k - 1)];
    return w;
}

KernelWeights weights(int k, double tau, const MuProfile& profile) {
    return weights_mu(k, tau, mu_eval(profile, double(k) * tau));
}

double apply_history(const KernelWeights& w, const std::vector<double>& values) {
    if (values.size() != w.b.size())
        throw std::invalid_argument("apply_history: expected k+1 values");
    double s = 0.0;
    for (std::size_t q = 0; q < w.b.size(); ++q) s += w.b[q] * values[q];
    return s;
}

std::vector<double> apply_history(const KernelWeights& w,
                                  const std::vector<std::vector<double>>& values) {
    if (values.size() != w.b.size())
        throw std::invalid_argument("apply_history: expected k+1 values");
    const std::size_t dim = values.empty() ? 0 : values[0].size();
    std::vector<double> out(dim, 0.0);
    for (std::size_t q = 0; q < w.b.size(); ++q) {
        if (values[q].size() != dim)
            throw std::invalid_argument("apply_history: ragged value vectors");
        const double bq = w.b[q];
        for (std::size_t j = 0; j < dim; ++j) out[j] += bq * values[q][j];
    }
    return out;
}

} // namespace vofwave
