#pragma once

#include <vector>

#include "vofwave/profiles.hpp"

namespace vofwave {

// L1-type quadrature weights of the discrete variable-order Caputo operator
// at step k (t_k = k tau), with the order frozen at mu_k = mu(t_k):
//
//   a_q^k = (t_k - t_{q-1})^{-mu_k} / Gamma(1 - mu_k),   q = 1..k
//   b_0^k = -a_1^k,  b_q^k = a_q^k - a_{q+1}^k (1 <= q < k),  b_k^k = a_k^k
//
// so that  D^{mu_k} Phi_k ~= sum_{q=1}^k a_q^k (Phi_q - Phi_{q-1})
//                         =  sum_{q=0}^k b_q^k Phi_q.
// Identities: sum_q b_q^k = 0; b_q^k <= 0 for q < k; a non-decreasing in q;
// b_k^k = tau^{-mu_k} / Gamma(1 - mu_k).
struct KernelWeights {
    int k = 0;
    double mu_k = 0.0;
    double tau = 0.0;
    std::vector<double> a; // a[q-1] = a_q^k, q = 1..k
    std::vector<double> b; // b[q]   = b_q^k, q = 0..k
};

KernelWeights weights(int k, double tau, const MuProfile& profile);

// Same, with the order at t_k supplied directly.
KernelWeights weights_mu(int k, double tau, double mu_k);

// sum_{q=0}^k b_q^k values[q]; length(values) must be k+1.
double apply_history(const KernelWeights& w, const std::vector<double>& values);
std::vector<double> apply_history(const KernelWeights& w,
                                  const std::vector<std::vector<double>>& values);

} // namespace vofwave
