// thermal.hpp — exact spectral computations: Hermitian eigendecomposition,
// Gibbs states, expectation values, partial traces, ground-state analysis.

#pragma once

#include "spincoh/pauli.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace spincoh {

// Full spectral decomposition of a Hermitian operator. Eigenvalues ascend;
// column k of `eigenvectors` belongs to eigenvalue k. Each column's phase is
// fixed so its first significant component is real positive, which makes
// downstream output reproducible bit-for-bit.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    Eigen::Index dim() const { return eigenvalues.size(); }
};

struct GroundStateInfo {
    double energy{0.0};
    Eigen::VectorXcd vector;
    int degeneracy{1};
    std::vector<double> reduced_purities;  // one entry per site, in [1/2, 1]
};

inline Spectrum eig_hermitian(const DenseOperator& h, double hermiticity_tol = 1e-10) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("eig_hermitian: operator must be square");
    if (!is_hermitian(h, hermiticity_tol))
        throw std::invalid_argument("eig_hermitian: operator is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
    Spectrum s;
    s.eigenvalues = solver.eigenvalues();
    s.eigenvectors = solver.eigenvectors();
    // Phase fixing: rotate each column so its first component with magnitude
    // above 1e-12 becomes real positive.
    for (Eigen::Index k = 0; k < s.eigenvectors.cols(); ++k) {
        for (Eigen::Index i = 0; i < s.eigenvectors.rows(); ++i) {
            const std::complex<double> v = s.eigenvectors(i, k);
            if (std::abs(v) > 1e-12) {
                s.eigenvectors.col(k) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
    return s;
}

// Boltzmann weights exp(-(E_k - E_0)/T), normalized. The ground-energy shift
// keeps the largest exponent at zero, so no overflow at small T.
inline Eigen::VectorXd gibbs_weights(const Spectrum& s, double temperature) {
    if (!(temperature > 0))
        throw std::invalid_argument("gibbs_weights: temperature must be > 0 "
                                    "(use ground_state for the T -> 0 limit)");
    const double e0 = s.eigenvalues.minCoeff();
    Eigen::VectorXd w = ((-(s.eigenvalues.array() - e0)) / temperature).exp();
    w /= w.sum();
    return w;
}

inline DensityMatrix gibbs_state(const Spectrum& s, double temperature) {
    const Eigen::VectorXd w = gibbs_weights(s, temperature);
    return s.eigenvectors * w.asDiagonal() * s.eigenvectors.adjoint();
}

// tau = Z^{-1} exp(-H/T), computed through the spectral decomposition.
inline DensityMatrix gibbs_state(const DenseOperator& h, double temperature) {
    return gibbs_state(eig_hermitian(h), temperature);
}

// Tr(o rho); real up to rounding when o is Hermitian.
inline std::complex<double> expectation(const DensityMatrix& rho, const DenseOperator& o) {
    if (rho.rows() != o.rows() || rho.cols() != o.cols() || rho.rows() != rho.cols())
        throw std::invalid_argument("expectation: dimension mismatch");
    // Tr(o rho) = sum_ij o_ij rho_ji
    return (o.transpose().cwiseProduct(rho)).sum();
}

namespace detail {

inline int sites_from_dim(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if ((Eigen::Index{1} << n) != dim)
        throw std::invalid_argument("operator dimension is not a power of two");
    return n;
}

}  // namespace detail

// Partial trace over the complement of `keep` (site 0 = most significant bit).
// Kept sites retain their relative order in the reduced indexing.
inline DensityMatrix reduced_density(const DensityMatrix& rho, std::vector<int> keep) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("reduced_density: matrix must be square");
    const int n = detail::sites_from_dim(rho.rows());
    if (keep.empty())
        throw std::invalid_argument("reduced_density: keep set must be nonempty");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int s : keep)
        if (s < 0 || s >= n)
            throw std::invalid_argument("reduced_density: site index out of range");

    std::vector<int> env;
    for (int s = 0; s < n; ++s)
        if (!std::binary_search(keep.begin(), keep.end(), s)) env.push_back(s);

    const int k = static_cast<int>(keep.size());
    const int m = static_cast<int>(env.size());
    const Eigen::Index dk = Eigen::Index{1} << k;
    const Eigen::Index dm = Eigen::Index{1} << m;

    // Bit position of site s inside a full index.
    auto site_bit = [n](int s) { return n - 1 - s; };
    // Embed a subsystem index into a full index over the given site list.
    auto embed = [&](Eigen::Index sub, const std::vector<int>& sites) {
        Eigen::Index full = 0;
        const int sz = static_cast<int>(sites.size());
        for (int j = 0; j < sz; ++j) {
            const Eigen::Index bit = (sub >> (sz - 1 - j)) & 1;
            full |= bit << site_bit(sites[j]);
        }
        return full;
    };

    DensityMatrix out = DensityMatrix::Zero(dk, dk);
    for (Eigen::Index a = 0; a < dk; ++a) {
        const Eigen::Index ia = embed(a, keep);
        for (Eigen::Index b = 0; b < dk; ++b) {
            const Eigen::Index ib = embed(b, keep);
            std::complex<double> sum = 0.0;
            for (Eigen::Index e = 0; e < dm; ++e) {
                const Eigen::Index ie = embed(e, env);
                sum += rho(ia | ie, ib | ie);
            }
            out(a, b) = sum;
        }
    }
    return out;
}

// Tr(rho^2), in [1/dim, 1] for a valid density matrix.
inline double purity(const DensityMatrix& rho) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("purity: matrix must be square");
    return (rho.transpose().cwiseProduct(rho)).sum().real();
}

inline bool is_density_matrix(const DensityMatrix& rho, double tol = 1e-12) {
    if (rho.rows() != rho.cols()) return false;
    if (std::abs(rho.trace().real() - 1.0) > tol) return false;
    if (std::abs(rho.trace().imag()) > tol) return false;
    if (!is_hermitian(rho, tol)) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

// Shannon entropy of a probability vector (natural log); zero weights skipped.
inline double shannon_entropy(const Eigen::VectorXd& probs) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i)
        if (probs[i] > 0) s -= probs[i] * std::log(probs[i]);
    return s;
}

// Lowest-eigenvalue analysis. Eigenvalues within 1e-10 of the ground energy,
// relative to the spectral range, count as one degenerate cluster; the T -> 0
// Gibbs limit is the equal-weight mixture over that cluster, and the per-site
// reduced purities are computed from it.
inline GroundStateInfo ground_state(const DenseOperator& h) {
    const Spectrum s = eig_hermitian(h);
    const int n = detail::sites_from_dim(s.dim());
    const double range = s.eigenvalues.maxCoeff() - s.eigenvalues.minCoeff();
    const double tol = 1e-10 * std::max(range, 1.0);

    GroundStateInfo info;
    info.energy = s.eigenvalues[0];
    info.vector = s.eigenvectors.col(0);
    info.degeneracy = 1;
    while (info.degeneracy < static_cast<int>(s.dim()) &&
           s.eigenvalues[info.degeneracy] - info.energy <= tol)
        ++info.degeneracy;

    DensityMatrix rho0 = DensityMatrix::Zero(s.dim(), s.dim());
    for (int k = 0; k < info.degeneracy; ++k)
        rho0 += s.eigenvectors.col(k) * s.eigenvectors.col(k).adjoint();
    rho0 /= info.degeneracy;

    info.reduced_purities.reserve(n);
    for (int site = 0; site < n; ++site)
        info.reduced_purities.push_back(purity(reduced_density(rho0, {site})));
    return info;
}

}  // namespace spincoh
