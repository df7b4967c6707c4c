// analytic.hpp — closed-form and asymptotic coherence expressions, used as
// cross-checks against the exact spectral engine. All are pure scalar
// evaluators; the regime tags say where each approximation applies, and the
// choice of regime stays with the caller.

#pragma once

#include "spincoh/models.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spincoh {

// C ~ prefactor * T^exponent in the stated validity regime. The prefactor is
// absent where no closed form is available (transferred-N).
struct AsymptoteLaw {
    double exponent{0.0};
    std::optional<double> prefactor;
    std::string validity;
};

// Exact C_1 of the direct model at any T:
// gamma tanh(w2/2T) tanh(sqrt(g^2+w1^2)/2T) / sqrt(g^2+w1^2).
inline double c1_direct_exact(double gamma, double omega1, double omega2, double T) {
    if (!(T > 0)) throw std::invalid_argument("c1_direct_exact: T must be > 0");
    if (!(omega1 > 0) || !(omega2 > 0))
        throw std::invalid_argument("c1_direct_exact: frequencies must be > 0");
    const double wbar = std::sqrt(gamma * gamma + omega1 * omega1);
    return gamma * std::tanh(omega2 / (2 * T)) * std::tanh(wbar / (2 * T)) / wbar;
}

// Low-T plateau of the direct model: (g/wbar) [1 - 2 exp(-wbar/T)].
inline double c1_direct_lowT(double gamma, double omega1, double T) {
    if (!(T > 0)) throw std::invalid_argument("c1_direct_lowT: T must be > 0");
    const double wbar = std::sqrt(gamma * gamma + omega1 * omega1);
    if (wbar == 0) return 0.0;
    return gamma / wbar * (1.0 - 2.0 * std::exp(-wbar / T));
}

// Low-T C_2 of the indirect model (valid for T << g, th, w_1(2)):
// (th g / wbar1) sqrt[(th^2 + (w2 - wbar1)^2) / ((th^2 + w2^2 + wbar1^2)^2 - 4 w2^2 wbar1^2)].
inline double c2_indirect_lowT(double gamma, double theta, double omega1, double omega2) {
    const double wbar1 = std::sqrt(omega1 * omega1 + gamma * gamma);
    const double num = theta * theta + (omega2 - wbar1) * (omega2 - wbar1);
    const double s = theta * theta + omega2 * omega2 + wbar1 * wbar1;
    const double den = s * s - 4 * omega2 * omega2 * wbar1 * wbar1;
    if (!(den > 1e-15 * s * s))
        throw std::domain_error("c2_indirect_lowT: vanishing denominator (degenerate "
                                "resonance omega2 = sqrt(omega1^2 + gamma^2))");
    return theta * gamma / wbar1 * std::sqrt(num / den);
}

// Coupling maximizing the low-T C_2 at fixed theta (expansion, valid for
// w1 <~ w2 and th <~ w2): w1^{2/3} (w2^{1/3} + th^2/(3 w2^{5/3}) - th^4/(9 w2^{11/3})).
inline double gamma_opt(double theta, double omega1, double omega2) {
    const double t2 = theta * theta;
    return std::pow(omega1, 2.0 / 3.0) *
           (std::cbrt(omega2) + t2 / (3 * std::pow(omega2, 5.0 / 3.0)) -
            t2 * t2 / (9 * std::pow(omega2, 11.0 / 3.0)));
}

// Low-T C_0 of the transferred model: th g / sqrt((th g)^2 + w0^2 (g^2 + w1^2)).
inline double c0_transferred_lowT(double gamma, double theta, double omega0, double omega1) {
    const double tg = theta * gamma;
    const double den = std::sqrt(tg * tg + omega0 * omega0 * (gamma * gamma + omega1 * omega1));
    if (den == 0) return 0.0;
    return tg / den;
}

// Low-T C_1^N for N direct sources: S / sqrt(S^2 + w1^2), S = sum of gamma_j.
inline double c1_direct_lowT_N(const std::vector<double>& gammas, double omega1) {
    if (gammas.empty())
        throw std::invalid_argument("c1_direct_lowT_N: empty coupling list");
    const double s = std::accumulate(gammas.begin(), gammas.end(), 0.0);
    const double den = std::sqrt(s * s + omega1 * omega1);
    if (den == 0) return 0.0;
    return s / den;
}

// Leading low-T C_T^N for N indirect sources (T << N g^2 << w): N g^2 / (w1 (wT + w1)).
inline double cT_indirect_lowT_N(int n_sources, double gamma, double omega1, double omega_t) {
    if (n_sources < 1) throw std::invalid_argument("cT_indirect_lowT_N: N must be >= 1");
    return n_sources * gamma * gamma / (omega1 * (omega_t + omega1));
}

// Low-T C_0^N for N sources feeding the mediator:
// N th g / sqrt((N th g)^2 + w0^2 ((N g)^2 + w1^2)).
inline double c0_transferred_lowT_N(int n_sources, double gamma, double theta, double omega0,
                                    double omega1) {
    if (n_sources < 1) throw std::invalid_argument("c0_transferred_lowT_N: N must be >= 1");
    const double ng = n_sources * gamma;
    const double ntg = theta * ng;
    const double den = std::sqrt(ntg * ntg + omega0 * omega0 * (ng * ng + omega1 * omega1));
    if (den == 0) return 0.0;
    return ntg / den;
}

// High-temperature power laws C ~ prefactor * T^exponent:
//   direct        C_1 ~ g w2 / (4 T^2)
//   indirect      C_2 ~ g th w2 / (24 T^3)
//   transferred   C_0 ~ g th w2 / (8 T^3)
//   direct-N      C_1 ~ (sum g_j) w2 / (4 T^2), identical sources
//   indirect-N    C_T ~ N g^2 wT / (24 T^3), identical sources
//   transferred-N C_0 ~ A / T^3 with A left unspecified.
inline AsymptoteLaw highT_asymptote(ModelTag tag, const ModelParams& p) {
    // The laws describe the coherence magnitude, so coupling signs drop out.
    switch (tag) {
        case ModelTag::direct:
            return {-2.0, std::abs(p.gamma) * p.omega2 / 4.0, "T >> gamma, omega_1(2)"};
        case ModelTag::indirect:
            return {-3.0, std::abs(p.gamma * p.theta) * p.omega2 / 24.0,
                    "T >> gamma, theta, omega_1(2)"};
        case ModelTag::transferred:
            return {-3.0, std::abs(p.gamma * p.theta) * p.omega2 / 8.0,
                    "T >> gamma, theta, omega_0(1,2)"};
        case ModelTag::direct_N: {
            if (p.gamma_sources.empty() || p.omega_sources.empty())
                throw std::invalid_argument("highT_asymptote: direct-N needs source lists");
            const double s =
                std::accumulate(p.gamma_sources.begin(), p.gamma_sources.end(), 0.0);
            return {-2.0, std::abs(s) * p.omega_sources.front() / 4.0,
                    "T >> gamma_j, omega_1(2); identical sources"};
        }
        case ModelTag::indirect_N: {
            if (p.gamma_sources.empty())
                throw std::invalid_argument("highT_asymptote: indirect-N needs source lists");
            const double g = p.gamma_sources.front();
            const double n = static_cast<double>(p.gamma_sources.size());
            return {-3.0, n * g * g * p.omega1 / 24.0,
                    "T >> gamma, omega_1(2); identical sources, theta_j = gamma_j"};
        }
        case ModelTag::transferred_N:
            return {-3.0, std::nullopt, "T >> gamma_j, theta, omega_0(1,j); prefactor unspecified"};
        case ModelTag::xyz:
            break;
    }
    throw std::invalid_argument("highT_asymptote: no high-T law for tag '" + to_string(tag) + "'");
}

}  // namespace spincoh
