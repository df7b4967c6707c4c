// pauli.hpp — Pauli strings on n two-level systems and their dense realization.
//
// Convention used everywhere in this library: site 0 is the leftmost tensor
// factor, i.e. the most significant bit of a computational-basis index.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spincoh {

using DenseOperator = Eigen::MatrixXcd;
using DensityMatrix = Eigen::MatrixXcd;

// Largest allowed number of sites unless a caller overrides the cap.
inline constexpr int default_site_cap = 12;

enum class PauliAxis : std::uint8_t { I, X, Y, Z };

inline char axis_char(PauliAxis a) {
    switch (a) {
        case PauliAxis::I: return 'I';
        case PauliAxis::X: return 'X';
        case PauliAxis::Y: return 'Y';
        case PauliAxis::Z: return 'Z';
    }
    return '?';
}

inline PauliAxis axis_from_char(char c) {
    switch (c) {
        case 'I': case 'i': return PauliAxis::I;
        case 'X': case 'x': return PauliAxis::X;
        case 'Y': case 'y': return PauliAxis::Y;
        case 'Z': case 'z': return PauliAxis::Z;
    }
    throw std::invalid_argument(std::string("axis_from_char: unknown axis '") + c + "'");
}

// The four single-site basis matrices (I, sigma^x, sigma^y, sigma^z).
inline const Eigen::Matrix2cd& pauli_matrix(PauliAxis a) {
    using namespace std::complex_literals;
    static const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    static const Eigen::Matrix2cd sx = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    static const Eigen::Matrix2cd sy = (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished();
    static const Eigen::Matrix2cd sz = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    switch (a) {
        case PauliAxis::I: return id;
        case PauliAxis::X: return sx;
        case PauliAxis::Y: return sy;
        case PauliAxis::Z: return sz;
    }
    throw std::invalid_argument("pauli_matrix: invalid axis");
}

// One weighted tensor product of single-site Pauli operators. A real
// coefficient makes the dense realization Hermitian.
struct PauliString {
    std::vector<PauliAxis> axes;
    double coefficient{1.0};

    PauliString() = default;
    PauliString(std::vector<PauliAxis> ax, double coeff)
        : axes(std::move(ax)), coefficient(coeff) {}

    // Convenience: axes given as a string over {I,X,Y,Z}, e.g. "XZ".
    PauliString(const std::string& s, double coeff) : coefficient(coeff) {
        axes.reserve(s.size());
        for (char c : s) axes.push_back(axis_from_char(c));
    }
};

// Number of sites carrying X or Y. Odd count means the string anticommutes
// with the global Z2 generator.
inline int xy_weight(const PauliString& p) {
    int w = 0;
    for (PauliAxis a : p.axes)
        if (a == PauliAxis::X || a == PauliAxis::Y) ++w;
    return w;
}

// A full Hamiltonian: a list of Pauli strings plus site metadata.
// Empty `terms` represents the zero operator.
struct OperatorSpec {
    int n_sites{0};
    std::vector<PauliString> terms;
    std::vector<std::string> site_labels;  // optional, same length as n_sites when set
};

inline void validate(const OperatorSpec& spec, int cap = default_site_cap) {
    if (spec.n_sites < 1)
        throw std::invalid_argument("OperatorSpec: n_sites must be >= 1");
    if (spec.n_sites > cap)
        throw std::invalid_argument("OperatorSpec: n_sites " + std::to_string(spec.n_sites) +
                                    " exceeds site cap " + std::to_string(cap));
    for (const auto& t : spec.terms) {
        if (static_cast<int>(t.axes.size()) != spec.n_sites)
            throw std::invalid_argument("OperatorSpec: term length does not match n_sites");
        if (!std::isfinite(t.coefficient))
            throw std::invalid_argument("OperatorSpec: non-finite coefficient");
    }
    if (!spec.site_labels.empty() &&
        static_cast<int>(spec.site_labels.size()) != spec.n_sites)
        throw std::invalid_argument("OperatorSpec: site_labels length does not match n_sites");
}

namespace detail {

// Kronecker extension by one 2x2 factor: a (x) b.
inline DenseOperator kron2(const DenseOperator& a, const Eigen::Matrix2cd& b) {
    DenseOperator out(2 * a.rows(), 2 * a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    return out;
}

}  // namespace detail

// I (x) ... (x) sigma^axis (x) ... (x) I with the Pauli factor at `site`.
inline DenseOperator single_site_pauli(PauliAxis axis, int site, int n_sites,
                                       int cap = default_site_cap) {
    if (n_sites < 1 || n_sites > cap)
        throw std::invalid_argument("single_site_pauli: n_sites out of range (cap " +
                                    std::to_string(cap) + ")");
    if (site < 0 || site >= n_sites)
        throw std::invalid_argument("single_site_pauli: site index out of range");
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (int s = 0; s < n_sites; ++s)
        out = detail::kron2(out, s == site ? pauli_matrix(axis)
                                           : pauli_matrix(PauliAxis::I));
    return out;
}

// coefficient * (ordered Kronecker product of the axis matrices).
inline DenseOperator string_to_matrix(const PauliString& p, int n_sites) {
    if (static_cast<int>(p.axes.size()) != n_sites)
        throw std::invalid_argument("string_to_matrix: axes length does not match n_sites");
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (PauliAxis a : p.axes) out = detail::kron2(out, pauli_matrix(a));
    return p.coefficient * out;
}

// Entrywise sum of string_to_matrix over all terms; Hermitian for real
// coefficients; dim = 2^n_sites.
inline DenseOperator build_operator(const OperatorSpec& spec, int cap = default_site_cap) {
    validate(spec, cap);
    const Eigen::Index dim = Eigen::Index{1} << spec.n_sites;
    DenseOperator h = DenseOperator::Zero(dim, dim);
    for (const auto& t : spec.terms) h += string_to_matrix(t, spec.n_sites);
    return h;
}

// Frobenius norm of ab - ba. Zero (up to tolerance) iff the operators commute.
inline double commutator_frobenius(const DenseOperator& a, const DenseOperator& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw std::invalid_argument("commutator_frobenius: dimension mismatch");
    return (a * b - b * a).norm();
}

inline bool is_hermitian(const DenseOperator& a, double tol) {
    if (tol <= 0) throw std::invalid_argument("is_hermitian: tol must be > 0");
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace spincoh
