#include "vofwave/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vofwave {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

MuProfile MuProfile::constant(double mu, double T) {
    return {MuKind::Constant, mu, mu, T, {}, {}};
}
MuProfile MuProfile::linear(double mu0, double muT, double T) {
    return {MuKind::Linear, mu0, muT, T, {}, {}};
}
MuProfile MuProfile::quadratic(double mu0, double muT, double T) {
    return {MuKind::Quadratic, mu0, muT, T, {}, {}};
}
MuProfile MuProfile::oscillating(double mu0, double muT, double T) {
    return {MuKind::Oscillating, mu0, muT, T, {}, {}};
}
MuProfile MuProfile::sinusoidal(double mu0, double muT, double T) {
    return {MuKind::Sinusoidal, mu0, muT, T, {}, {}};
}
MuProfile MuProfile::piecewise_step(double mu0, double muT, double T) {
    return {MuKind::PiecewiseStep, mu0, muT, T, {}, {}};
}
MuProfile MuProfile::tabulated(std::vector<double> t, std::vector<double> mu) {
    if (t.size() < 2 || t.size() != mu.size())
        throw std::invalid_argument("MuProfile::tabulated: need matching knot lists, length >= 2");
    if (!std::is_sorted(t.begin(), t.end()) ||
        std::adjacent_find(t.begin(), t.end()) != t.end())
        throw std::invalid_argument("MuProfile::tabulated: knots must be strictly increasing");
    MuProfile p{MuKind::Tabulated, mu.front(), mu.back(), t.back(), std::move(t), std::move(mu)};
    return p;
}

double mu_eval(const MuProfile& profile, double t) {
    const double T = profile.T;
    if (!(t >= 0.0 && t <= T))
        throw std::domain_error("mu_eval: t outside [0, T]");
    const double s = t / T; // normalized time
    switch (profile.kind) {
    case MuKind::Constant:
        return profile.mu0;
    case MuKind::Linear:
        return profile.muT + (profile.mu0 - profile.muT) * (1.0 - s);
    case MuKind::Quadratic:
        return profile.muT + (profile.mu0 - profile.muT) * (1.0 - s * s);
    case MuKind::Oscillating:
        return profile.muT +
               (profile.mu0 - profile.muT) *
                   (1.0 - s - std::sin(kTwoPi * (1.0 - s)) / kTwoPi);
    case MuKind::Sinusoidal:
        return profile.muT +
               (profile.mu0 - profile.muT) * (1.0 - std::sin(kTwoPi * (1.0 - s)) / kTwoPi);
    case MuKind::PiecewiseStep:
        return t <= 0.5 * T ? profile.mu0 : profile.muT;
    case MuKind::Tabulated: {
        const auto& ts = profile.knots_t;
        const auto& ms = profile.knots_mu;
        if (t <= ts.front()) return ms.front();
        if (t >= ts.back()) return ms.back();
        auto it = std::upper_bound(ts.begin(), ts.end(), t);
        const std::size_t j = std::size_t(it - ts.begin());
        const double w = (t - ts[j - 1]) / (ts[j] - ts[j - 1]);
        return ms[j - 1] + w * (ms[j] - ms[j - 1]);
    }
    }
    throw std::logic_error("mu_eval: unknown profile kind");
}

double mu_bar(const MuProfile& profile) {
    switch (profile.kind) {
    case MuKind::Constant:
        return profile.mu0;
    case MuKind::Linear:
    case MuKind::Quadratic:
    case MuKind::Oscillating: // monotone between endpoints
    case MuKind::PiecewiseStep:
        return std::max(profile.mu0, profile.muT);
    case MuKind::Sinusoidal:
        // factor 1 - sin(.)/(2 pi) ranges over [1 - 1/(2 pi), 1 + 1/(2 pi)]
        return profile.mu0 + std::abs(profile.mu0 - profile.muT) / kTwoPi;
    case MuKind::Tabulated:
        return *std::max_element(profile.knots_mu.begin(), profile.knots_mu.end());
    }
    throw std::logic_error("mu_bar: unknown profile kind");
}

double CoefficientFn::operator()(double t) const {
    return kind == Kind::Constant ? value : value * std::exp(rate * t);
}

} // namespace vofwave
