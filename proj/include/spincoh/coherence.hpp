// coherence.hpp — the l1 local-coherence measure, the global Z2 generator,
// and the symmetry test that decides whether a Hamiltonian can support local
// coherence in its Gibbs state.

#pragma once

#include "spincoh/models.hpp"
#include "spincoh/pauli.hpp"
#include "spincoh/thermal.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace spincoh {

// Per-site l1 coherences of one Gibbs state.
struct CoherenceProfile {
    double temperature{0.0};
    std::vector<double> per_site;
};

// C_j = |<sigma_j^x> + i <sigma_j^y>|, in [0, 1]. Equals twice the magnitude
// of the off-diagonal of site j's reduced density matrix.
inline double local_coherence(const DensityMatrix& rho, int site, int n_sites) {
    if (rho.rows() != (Eigen::Index{1} << n_sites) || rho.rows() != rho.cols())
        throw std::invalid_argument("local_coherence: dimension mismatch");
    if (site < 0 || site >= n_sites)
        throw std::invalid_argument("local_coherence: site index out of range");
    const std::complex<double> ex =
        expectation(rho, single_site_pauli(PauliAxis::X, site, n_sites, n_sites));
    const std::complex<double> ey =
        expectation(rho, single_site_pauli(PauliAxis::Y, site, n_sites, n_sites));
    return std::abs(ex + std::complex<double>(0, 1) * ey);
}

// Build the operator, form its Gibbs state, and evaluate every site.
inline CoherenceProfile coherence_profile(const OperatorSpec& spec, double temperature,
                                          int cap = default_site_cap) {
    const DensityMatrix tau = gibbs_state(build_operator(spec, cap), temperature);
    CoherenceProfile profile;
    profile.temperature = temperature;
    profile.per_site.reserve(spec.n_sites);
    for (int site = 0; site < spec.n_sites; ++site)
        profile.per_site.push_back(local_coherence(tau, site, spec.n_sites));
    return profile;
}

// Z = (x)_i sigma_i^z: diagonal +-1 involution generating the Z2 symmetry
// sigma^{x,y} -> -sigma^{x,y}.
inline DenseOperator z_generator(int n_sites, int cap = default_site_cap) {
    if (n_sites < 1 || n_sites > cap)
        throw std::invalid_argument("z_generator: n_sites out of range (cap " +
                                    std::to_string(cap) + ")");
    const Eigen::Index dim = Eigen::Index{1} << n_sites;
    DenseOperator z = DenseOperator::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        // parity of the bit pattern
        int bits = 0;
        for (int s = 0; s < n_sites; ++s) bits += static_cast<int>((i >> s) & 1);
        z(i, i) = (bits % 2 == 0) ? 1.0 : -1.0;
    }
    return z;
}

// True iff [Z, H] vanishes relative to ||H||_F. Two routes are evaluated and
// must agree: the dense commutator, and the term-parity rule (a Pauli string
// commutes with Z iff its X/Y count is even, so the analytic commutator norm
// is 2 * sqrt(2^n * sum of squared net odd-parity coefficients). Disagreement
// signals an implementation bug, not a property of the input.
inline bool is_z2_symmetric(const OperatorSpec& spec, double tol = 1e-10,
                            int cap = default_site_cap) {
    if (!(tol > 0)) throw std::invalid_argument("is_z2_symmetric: tol must be > 0");
    validate(spec, cap);

    const DenseOperator h = build_operator(spec, cap);
    const double h_norm = h.norm();
    const double threshold = tol * h_norm;

    const double dense = commutator_frobenius(z_generator(spec.n_sites, cap), h);

    // Net coefficient per distinct odd-parity string (duplicates add).
    std::map<std::vector<PauliAxis>, double> odd;
    for (const auto& t : spec.terms)
        if (xy_weight(t) % 2 == 1) odd[t.axes] += t.coefficient;
    double sum_sq = 0.0;
    for (const auto& [axes, c] : odd) sum_sq += c * c;
    const double analytic =
        2.0 * std::sqrt(std::ldexp(sum_sq, spec.n_sites));  // 2 sqrt(2^n sum c^2)

    const bool dense_sym = dense <= threshold;
    const bool parity_sym = analytic <= threshold;
    if (dense_sym != parity_sym)
        throw std::logic_error(
            "is_z2_symmetric: dense commutator and term-parity rule disagree "
            "(dense " + std::to_string(dense) + ", analytic " + std::to_string(analytic) +
            ", threshold " + std::to_string(threshold) + ")");
    return dense_sym;
}

}  // namespace spincoh
