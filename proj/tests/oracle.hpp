// oracle.hpp — test-only reference implementations, written independently of
// the library code paths they check: textbook Pauli matrices, a naive
// Kronecker product, a brute-force partial trace, and small closed forms.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXcd;

inline Mat pauli_i() { return Mat::Identity(2, 2); }

inline Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Mat pauli_y() {
    using namespace std::complex_literals;
    Mat m(2, 2);
    m << 0, -1i, 1i, 0;
    return m;
}

inline Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

// Textbook Kronecker product via four nested loops.
inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline Mat kron_chain(const std::vector<Mat>& factors) {
    Mat out = Mat::Identity(1, 1);
    for (const auto& f : factors) out = kron(out, f);
    return out;
}

// Brute-force partial trace with site 0 as the most significant bit: iterate
// over all pairs of full indices and accumulate the entries whose traced-out
// bits coincide.
inline Mat partial_trace(const Mat& rho, const std::vector<int>& keep, int n_sites) {
    const int k = static_cast<int>(keep.size());
    const Eigen::Index dk = Eigen::Index{1} << k;
    Mat out = Mat::Zero(dk, dk);

    auto bit_of_site = [n_sites](Eigen::Index idx, int site) {
        return (idx >> (n_sites - 1 - site)) & 1;
    };
    auto kept_pattern = [&](Eigen::Index idx) {
        Eigen::Index p = 0;
        for (int j = 0; j < k; ++j) p = (p << 1) | bit_of_site(idx, keep[j]);
        return p;
    };
    auto env_bits_match = [&](Eigen::Index a, Eigen::Index b) {
        for (int s = 0; s < n_sites; ++s) {
            bool in_keep = false;
            for (int j = 0; j < k; ++j)
                if (keep[j] == s) in_keep = true;
            if (!in_keep && bit_of_site(a, s) != bit_of_site(b, s)) return false;
        }
        return true;
    };

    const Eigen::Index dim = rho.rows();
    for (Eigen::Index a = 0; a < dim; ++a)
        for (Eigen::Index b = 0; b < dim; ++b)
            if (env_bits_match(a, b)) out(kept_pattern(a), kept_pattern(b)) += rho(a, b);
    return out;
}

// Excited-state population of a single TLS with splitting omega at
// temperature T: 1 / (1 + exp(omega/T)).
inline double two_level_excited_population(double omega, double T) {
    return 1.0 / (1.0 + std::exp(omega / T));
}

// Ground energy of the direct two-TLS model from its 2x2 block structure:
// -(sqrt(gamma^2 + omega1^2) + omega2) / 2.
inline double direct_ground_energy(double omega1, double omega2, double gamma) {
    return -(std::sqrt(gamma * gamma + omega1 * omega1) + omega2) / 2.0;
}

}  // namespace oracle
