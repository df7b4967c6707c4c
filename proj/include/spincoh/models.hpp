// models.hpp — the named Hamiltonians of the catalog, as OperatorSpec values.
//
// Site mapping: the coherence carrier of interest sits at index 0 (the
// "first"/"target"/"zeroth" TLS), sources follow in order. Human-readable
// roles are recorded in site_labels.

#pragma once

#include "spincoh/pauli.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spincoh {

enum class ModelTag {
    direct,
    indirect,
    transferred,
    direct_N,
    indirect_N,
    transferred_N,
    xyz,
};

inline std::string to_string(ModelTag tag) {
    switch (tag) {
        case ModelTag::direct: return "direct";
        case ModelTag::indirect: return "indirect";
        case ModelTag::transferred: return "transferred";
        case ModelTag::direct_N: return "direct-N";
        case ModelTag::indirect_N: return "indirect-N";
        case ModelTag::transferred_N: return "transferred-N";
        case ModelTag::xyz: return "xyz";
    }
    return "?";
}

inline ModelTag model_tag_from_string(const std::string& s) {
    if (s == "direct") return ModelTag::direct;
    if (s == "indirect") return ModelTag::indirect;
    if (s == "transferred") return ModelTag::transferred;
    if (s == "direct-N") return ModelTag::direct_N;
    if (s == "indirect-N") return ModelTag::indirect_N;
    if (s == "transferred-N") return ModelTag::transferred_N;
    if (s == "xyz") return ModelTag::xyz;
    throw std::invalid_argument("unknown model tag '" + s + "'");
}

// Parameter bundle covering every catalog model; each constructor reads the
// fields it needs. Frequencies are energies (hbar = k = 1).
struct ModelParams {
    double omega0{1.0};        // transferred target
    double omega1{1.0};        // first TLS / mediator / N-model target
    double omega2{1.0};        // second TLS
    double gamma{0.0};
    double theta{0.0};
    double gamma_x{0.0}, gamma_y{0.0}, gamma_z{0.0};  // xyz chain
    std::vector<double> omega_sources;
    std::vector<double> gamma_sources;
    std::vector<double> theta_sources;
};

namespace detail {

inline void require_positive(double v, const char* name) {
    if (!(v > 0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("model: ") + name + " must be > 0 and finite");
}

inline PauliString site_term(int n, int site, PauliAxis axis, double coeff) {
    std::vector<PauliAxis> axes(n, PauliAxis::I);
    axes[site] = axis;
    return PauliString(std::move(axes), coeff);
}

inline PauliString pair_term(int n, int s1, PauliAxis a1, int s2, PauliAxis a2, double coeff) {
    std::vector<PauliAxis> axes(n, PauliAxis::I);
    axes[s1] = a1;
    axes[s2] = a2;
    return PauliString(std::move(axes), coeff);
}

}  // namespace detail

// H = (w1/2) sz_0 + (g/2) sx_0 sz_1 + (w2/2) sz_1.
// Coherence is generated directly on site 0 by the population of site 1.
inline OperatorSpec direct_model(double omega1, double omega2, double gamma) {
    detail::require_positive(omega1, "omega1");
    detail::require_positive(omega2, "omega2");
    using namespace detail;
    OperatorSpec spec;
    spec.n_sites = 2;
    spec.terms = {
        site_term(2, 0, PauliAxis::Z, omega1 / 2),
        pair_term(2, 0, PauliAxis::X, 1, PauliAxis::Z, gamma / 2),
        site_term(2, 1, PauliAxis::Z, omega2 / 2),
    };
    spec.site_labels = {"tls-1", "tls-2"};
    return spec;
}

// H = (w1/2) sz_0 + (g/2) sx_0 sz_1 + (th/2) sx_0 sx_1 + (w2/2) sz_1.
// The x-x exchange moves coherence onto site 1 at second order.
inline OperatorSpec indirect_model(double omega1, double omega2, double gamma, double theta) {
    detail::require_positive(omega1, "omega1");
    detail::require_positive(omega2, "omega2");
    using namespace detail;
    OperatorSpec spec;
    spec.n_sites = 2;
    spec.terms = {
        site_term(2, 0, PauliAxis::Z, omega1 / 2),
        pair_term(2, 0, PauliAxis::X, 1, PauliAxis::Z, gamma / 2),
        pair_term(2, 0, PauliAxis::X, 1, PauliAxis::X, theta / 2),
        site_term(2, 1, PauliAxis::Z, omega2 / 2),
    };
    spec.site_labels = {"tls-1", "tls-2"};
    return spec;
}

// H = (w0/2) sz_0 + (w1/2) sz_1 + (w2/2) sz_2 + (th/2) sx_0 sx_1 + (g/2) sx_1 sz_2.
// Coherence generated on the mediator (site 1) and transferred to site 0.
inline OperatorSpec transferred_model(double omega0, double omega1, double omega2,
                                      double gamma, double theta) {
    detail::require_positive(omega0, "omega0");
    detail::require_positive(omega1, "omega1");
    detail::require_positive(omega2, "omega2");
    using namespace detail;
    OperatorSpec spec;
    spec.n_sites = 3;
    spec.terms = {
        site_term(3, 0, PauliAxis::Z, omega0 / 2),
        site_term(3, 1, PauliAxis::Z, omega1 / 2),
        site_term(3, 2, PauliAxis::Z, omega2 / 2),
        pair_term(3, 0, PauliAxis::X, 1, PauliAxis::X, theta / 2),
        pair_term(3, 1, PauliAxis::X, 2, PauliAxis::Z, gamma / 2),
    };
    spec.site_labels = {"tls-0", "tls-1", "tls-2"};
    return spec;
}

// N-source generalization of the direct model; target at index 0,
// sources at indices 1..N.
inline OperatorSpec direct_model_N(double omega1, const std::vector<double>& omega_sources,
                                   const std::vector<double>& gamma_sources) {
    detail::require_positive(omega1, "omega1");
    if (omega_sources.empty())
        throw std::invalid_argument("direct_model_N: source list must be nonempty");
    if (omega_sources.size() != gamma_sources.size())
        throw std::invalid_argument("direct_model_N: source list length mismatch");
    using namespace detail;
    const int N = static_cast<int>(omega_sources.size());
    const int n = N + 1;
    OperatorSpec spec;
    spec.n_sites = n;
    spec.terms.push_back(site_term(n, 0, PauliAxis::Z, omega1 / 2));
    spec.site_labels = {"target"};
    for (int j = 0; j < N; ++j) {
        detail::require_positive(omega_sources[j], "omega_j");
        spec.terms.push_back(pair_term(n, 0, PauliAxis::X, j + 1, PauliAxis::Z,
                                       gamma_sources[j] / 2));
        spec.terms.push_back(site_term(n, j + 1, PauliAxis::Z, omega_sources[j] / 2));
        spec.site_labels.push_back("source-" + std::to_string(j + 1));
    }
    return spec;
}

// N-source indirect generation:
// H = (wT/2) sz_T + sum_j (wj/2) sz_j + sum_j [(gj/2) sz_T sx_j + (thj/2) sx_T sx_j],
// with the target at index 0. For N = 1 this is the two-site indirect model
// with its sites swapped (target listed first).
inline OperatorSpec indirect_model_N(double omega_target,
                                     const std::vector<double>& omega_sources,
                                     const std::vector<double>& gamma_sources,
                                     const std::vector<double>& theta_sources) {
    detail::require_positive(omega_target, "omega_target");
    if (omega_sources.empty())
        throw std::invalid_argument("indirect_model_N: source list must be nonempty");
    if (omega_sources.size() != gamma_sources.size() ||
        omega_sources.size() != theta_sources.size())
        throw std::invalid_argument("indirect_model_N: source list length mismatch");
    using namespace detail;
    const int N = static_cast<int>(omega_sources.size());
    const int n = N + 1;
    OperatorSpec spec;
    spec.n_sites = n;
    spec.terms.push_back(site_term(n, 0, PauliAxis::Z, omega_target / 2));
    spec.site_labels = {"target"};
    for (int j = 0; j < N; ++j) {
        detail::require_positive(omega_sources[j], "omega_j");
        spec.terms.push_back(site_term(n, j + 1, PauliAxis::Z, omega_sources[j] / 2));
        spec.terms.push_back(pair_term(n, 0, PauliAxis::Z, j + 1, PauliAxis::X,
                                       gamma_sources[j] / 2));
        spec.terms.push_back(pair_term(n, 0, PauliAxis::X, j + 1, PauliAxis::X,
                                       theta_sources[j] / 2));
        spec.site_labels.push_back("source-" + std::to_string(j + 1));
    }
    return spec;
}

// Coherence generated by N sources on a mediator (index 1) and transferred
// to the target (index 0); sources at indices 2..N+1.
inline OperatorSpec transferred_model_N(double omega0, double omega1,
                                        const std::vector<double>& omega_sources,
                                        const std::vector<double>& gamma_sources,
                                        double theta) {
    detail::require_positive(omega0, "omega0");
    detail::require_positive(omega1, "omega1");
    if (omega_sources.empty())
        throw std::invalid_argument("transferred_model_N: source list must be nonempty");
    if (omega_sources.size() != gamma_sources.size())
        throw std::invalid_argument("transferred_model_N: source list length mismatch");
    using namespace detail;
    const int N = static_cast<int>(omega_sources.size());
    const int n = N + 2;
    OperatorSpec spec;
    spec.n_sites = n;
    spec.terms.push_back(site_term(n, 0, PauliAxis::Z, omega0 / 2));
    spec.terms.push_back(site_term(n, 1, PauliAxis::Z, omega1 / 2));
    spec.terms.push_back(pair_term(n, 0, PauliAxis::X, 1, PauliAxis::X, theta / 2));
    spec.site_labels = {"target", "mediator"};
    for (int j = 0; j < N; ++j) {
        detail::require_positive(omega_sources[j], "omega_j");
        spec.terms.push_back(pair_term(n, 1, PauliAxis::X, j + 2, PauliAxis::Z,
                                       gamma_sources[j] / 2));
        spec.terms.push_back(site_term(n, j + 2, PauliAxis::Z, omega_sources[j] / 2));
        spec.site_labels.push_back("source-" + std::to_string(j + 1));
    }
    return spec;
}

// General XYZ two-spin chain: local sz terms plus (ga/2) s^a_0 s^a_1 for
// a in {x,y,z}. Z2 symmetric for any couplings, so the Gibbs state carries
// no local coherence.
inline OperatorSpec xyz_chain_model(double omega1, double omega2, double gamma_x,
                                    double gamma_y, double gamma_z) {
    detail::require_positive(omega1, "omega1");
    detail::require_positive(omega2, "omega2");
    using namespace detail;
    OperatorSpec spec;
    spec.n_sites = 2;
    spec.terms = {
        site_term(2, 0, PauliAxis::Z, omega1 / 2),
        site_term(2, 1, PauliAxis::Z, omega2 / 2),
        pair_term(2, 0, PauliAxis::X, 1, PauliAxis::X, gamma_x / 2),
        pair_term(2, 0, PauliAxis::Y, 1, PauliAxis::Y, gamma_y / 2),
        pair_term(2, 0, PauliAxis::Z, 1, PauliAxis::Z, gamma_z / 2),
    };
    spec.site_labels = {"tls-1", "tls-2"};
    return spec;
}

// Dispatch a tag + parameter bundle to the catalog constructors.
inline OperatorSpec make_model(ModelTag tag, const ModelParams& p) {
    switch (tag) {
        case ModelTag::direct:
            return direct_model(p.omega1, p.omega2, p.gamma);
        case ModelTag::indirect:
            return indirect_model(p.omega1, p.omega2, p.gamma, p.theta);
        case ModelTag::transferred:
            return transferred_model(p.omega0, p.omega1, p.omega2, p.gamma, p.theta);
        case ModelTag::direct_N:
            return direct_model_N(p.omega1, p.omega_sources, p.gamma_sources);
        case ModelTag::indirect_N:
            return indirect_model_N(p.omega1, p.omega_sources, p.gamma_sources,
                                    p.theta_sources);
        case ModelTag::transferred_N:
            return transferred_model_N(p.omega0, p.omega1, p.omega_sources,
                                       p.gamma_sources, p.theta);
        case ModelTag::xyz:
            return xyz_chain_model(p.omega1, p.omega2, p.gamma_x, p.gamma_y, p.gamma_z);
    }
    throw std::invalid_argument("make_model: invalid tag");
}

}  // namespace spincoh
