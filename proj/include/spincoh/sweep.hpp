// sweep.hpp — temperature sweeps with spectrum reuse, deterministic CSV
// emission, power-law tail fitting, optimal-coupling search, and the figure
// presets of the catalog models.

#pragma once

#include "spincoh/analytic.hpp"
#include "spincoh/coherence.hpp"
#include "spincoh/models.hpp"
#include "spincoh/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace spincoh {

inline constexpr const char* engine_version = "spincoh 0.1.0";

enum class GridSpacing { linear, log };

struct SweepConfig {
    ModelTag model{ModelTag::direct};
    ModelParams params;
    double t_min{1e-2};
    double t_max{1e1};
    int points{60};
    GridSpacing spacing{GridSpacing::log};
    std::vector<int> sites_of_interest;  // empty = all sites
};

// Temperature grid x per-site coherence columns; the unit of CSV output.
struct SweepTable {
    std::vector<double> temperatures;    // ascending
    std::vector<int> sites;              // column -> site index
    Eigen::MatrixXd coherences;          // points x sites, entries in [0, 1]
    std::string provenance;
};

struct FitResult {
    double exponent{0.0};
    double prefactor{0.0};
    double rms_residual{0.0};  // in log-log space
    double window_lo{0.0};
    double window_hi{0.0};
};

inline void validate(const SweepConfig& cfg) {
    if (!(cfg.t_min > 0) || !(cfg.t_max > 0) || !(cfg.t_min < cfg.t_max))
        throw std::invalid_argument("SweepConfig: need 0 < t_min < t_max");
    if (cfg.points < 2 || cfg.points > 100000)
        throw std::invalid_argument("SweepConfig: points must be in [2, 100000]");
}

inline std::vector<double> temperature_grid(const SweepConfig& cfg) {
    validate(cfg);
    std::vector<double> ts(cfg.points);
    if (cfg.spacing == GridSpacing::linear) {
        const double step = (cfg.t_max - cfg.t_min) / (cfg.points - 1);
        for (int i = 0; i < cfg.points; ++i) ts[i] = cfg.t_min + step * i;
    } else {
        const double l0 = std::log(cfg.t_min);
        const double step = (std::log(cfg.t_max) - l0) / (cfg.points - 1);
        for (int i = 0; i < cfg.points; ++i) ts[i] = std::exp(l0 + step * i);
    }
    ts.front() = cfg.t_min;
    ts.back() = cfg.t_max;
    return ts;
}

// 2 * max |coefficient|: the coefficients carry omega/2, gamma/2, theta/2,
// so this recovers the largest frequency or coupling of the model.
inline double max_energy_scale(const OperatorSpec& spec) {
    double m = 0.0;
    for (const auto& t : spec.terms) m = std::max(m, std::abs(t.coefficient));
    return 2.0 * m;
}

// CSV field: 12 significant digits, lowercase scientific when |v| < 1e-3.
inline std::string format_csv_field(double v) {
    char buf[40];
    if (std::abs(v) < 1e-3)
        std::snprintf(buf, sizeof(buf), "%.11e", v);
    else
        std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace detail {

inline std::string describe(const SweepConfig& cfg) {
    std::string s = std::string(engine_version) + "; model=" + to_string(cfg.model);
    const ModelParams& p = cfg.params;
    auto add = [&s](const char* k, double v) {
        s += "; ";
        s += k;
        s += "=";
        s += format_csv_field(v);
    };
    auto add_list = [&s](const char* k, const std::vector<double>& v) {
        s += "; ";
        s += k;
        s += "=[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += format_csv_field(v[i]);
        }
        s += "]";
    };
    switch (cfg.model) {
        case ModelTag::direct:
            add("omega1", p.omega1); add("omega2", p.omega2); add("gamma", p.gamma);
            break;
        case ModelTag::indirect:
            add("omega1", p.omega1); add("omega2", p.omega2);
            add("gamma", p.gamma); add("theta", p.theta);
            break;
        case ModelTag::transferred:
            add("omega0", p.omega0); add("omega1", p.omega1); add("omega2", p.omega2);
            add("gamma", p.gamma); add("theta", p.theta);
            break;
        case ModelTag::direct_N:
            add("omega1", p.omega1);
            add_list("omega_src", p.omega_sources); add_list("gamma_src", p.gamma_sources);
            break;
        case ModelTag::indirect_N:
            add("omega_target", p.omega1);
            add_list("omega_src", p.omega_sources); add_list("gamma_src", p.gamma_sources);
            add_list("theta_src", p.theta_sources);
            break;
        case ModelTag::transferred_N:
            add("omega0", p.omega0); add("omega1", p.omega1); add("theta", p.theta);
            add_list("omega_src", p.omega_sources); add_list("gamma_src", p.gamma_sources);
            break;
        case ModelTag::xyz:
            add("omega1", p.omega1); add("omega2", p.omega2);
            add("gamma_x", p.gamma_x); add("gamma_y", p.gamma_y); add("gamma_z", p.gamma_z);
            break;
    }
    add("tmin", cfg.t_min);
    add("tmax", cfg.t_max);
    s += "; points=" + std::to_string(cfg.points);
    s += cfg.spacing == GridSpacing::log ? "; spacing=log" : "; spacing=linear";
    return s;
}

// Diagonal elements <v_k| sigma_site^{x,y} |v_k> for every eigenvector,
// computed with bit flips instead of dense operators. With site 0 as the
// most significant bit, sigma^x_s swaps the two halves of the site-s bit and
// sigma^y_s adds the phase -i (bit 0) / +i (bit 1) to the swapped amplitude.
struct SiteQuadratures {
    Eigen::VectorXd dx;  // per eigenvector k
    Eigen::VectorXd dy;
};

inline SiteQuadratures site_quadratures(const Eigen::MatrixXcd& vecs, int site, int n_sites) {
    const Eigen::Index dim = vecs.rows();
    const Eigen::Index mask = Eigen::Index{1} << (n_sites - 1 - site);
    SiteQuadratures q;
    q.dx.resize(vecs.cols());
    q.dy.resize(vecs.cols());
    for (Eigen::Index k = 0; k < vecs.cols(); ++k) {
        std::complex<double> ax = 0.0, ay = 0.0;
        for (Eigen::Index i = 0; i < dim; ++i) {
            const std::complex<double> flipped = vecs(i ^ mask, k);
            const std::complex<double> c = std::conj(vecs(i, k));
            ax += c * flipped;
            // (sigma^y v)[i] = -i v[i^mask] if bit is 0, +i v[i^mask] if 1
            ay += c * ((i & mask) ? std::complex<double>(0, 1) * flipped
                                  : std::complex<double>(0, -1) * flipped);
        }
        q.dx[k] = ax.real();
        q.dy[k] = ay.real();
    }
    return q;
}

}  // namespace detail

// One eigendecomposition per model; every temperature row is then an O(dim)
// weighted sum over the precomputed eigenvector quadratures. Row values do
// not depend on the execution order, so serial and parallel runs coincide
// exactly.
inline SweepTable run_sweep(const SweepConfig& cfg, bool parallel = true,
                            int cap = default_site_cap) {
    validate(cfg);
    const OperatorSpec spec = make_model(cfg.model, cfg.params);
    validate(spec, cap);

    std::vector<int> sites = cfg.sites_of_interest;
    if (sites.empty())
        for (int s = 0; s < spec.n_sites; ++s) sites.push_back(s);
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    for (int s : sites)
        if (s < 0 || s >= spec.n_sites)
            throw std::invalid_argument("run_sweep: site of interest out of range");

    const Spectrum spectrum = eig_hermitian(build_operator(spec, cap));
    std::vector<detail::SiteQuadratures> quads;
    quads.reserve(sites.size());
    for (int s : sites)
        quads.push_back(detail::site_quadratures(spectrum.eigenvectors, s, spec.n_sites));

    SweepTable table;
    table.temperatures = temperature_grid(cfg);
    table.sites = sites;
    table.coherences.resize(cfg.points, static_cast<Eigen::Index>(sites.size()));
    table.provenance = detail::describe(cfg);

    auto fill_rows = [&](int begin, int end) {
        for (int r = begin; r < end; ++r) {
            const Eigen::VectorXd w = gibbs_weights(spectrum, table.temperatures[r]);
            for (std::size_t c = 0; c < sites.size(); ++c) {
                const double ex = w.dot(quads[c].dx);
                const double ey = w.dot(quads[c].dy);
                table.coherences(r, static_cast<Eigen::Index>(c)) =
                    std::clamp(std::hypot(ex, ey), 0.0, 1.0);
            }
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const int n_threads =
        parallel ? std::max(1, std::min<int>(hw ? static_cast<int>(hw) : 1, cfg.points)) : 1;
    if (n_threads == 1) {
        fill_rows(0, cfg.points);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        const int chunk = (cfg.points + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(cfg.points, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(fill_rows, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return table;
}

inline std::string to_csv(const SweepTable& table) {
    std::string out = "T";
    for (int s : table.sites) out += ",C_site" + std::to_string(s);
    out += "\n";
    for (std::size_t r = 0; r < table.temperatures.size(); ++r) {
        out += format_csv_field(table.temperatures[r]);
        for (Eigen::Index c = 0; c < table.coherences.cols(); ++c) {
            out += ",";
            out += format_csv_field(table.coherences(static_cast<Eigen::Index>(r), c));
        }
        out += "\n";
    }
    return out;
}

inline void emit_csv(const SweepTable& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("emit_csv: cannot open '" + path + "' for writing");
    const std::string body = to_csv(table);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!f) throw std::runtime_error("emit_csv: write to '" + path + "' failed");
}

// Least-squares line in (log T, log C) over the grid points falling inside
// [t_lo, t_hi]. Slope is the exponent, exp(intercept) the prefactor.
inline FitResult fit_power_tail(const SweepTable& table, int site, double t_lo, double t_hi) {
    auto col_it = std::find(table.sites.begin(), table.sites.end(), site);
    if (col_it == table.sites.end())
        throw std::invalid_argument("fit_power_tail: site not present in table");
    const Eigen::Index col = col_it - table.sites.begin();
    if (!(t_lo < t_hi))
        throw std::invalid_argument("fit_power_tail: need t_lo < t_hi");

    std::vector<double> lx, ly;
    for (std::size_t r = 0; r < table.temperatures.size(); ++r) {
        const double t = table.temperatures[r];
        if (t < t_lo || t > t_hi) continue;
        const double c = table.coherences(static_cast<Eigen::Index>(r), col);
        if (!(c > 0))
            throw std::domain_error("fit_power_tail: nonpositive coherence inside window");
        lx.push_back(std::log(t));
        ly.push_back(std::log(c));
    }
    const int n = static_cast<int>(lx.size());
    if (n < 5)
        throw std::invalid_argument("fit_power_tail: fewer than 5 grid points in window");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    double ss = 0;
    for (int i = 0; i < n; ++i) {
        const double res = ly[i] - (slope * lx[i] + intercept);
        ss += res * res;
    }
    FitResult fit;
    fit.exponent = slope;
    fit.prefactor = std::exp(intercept);
    fit.rms_residual = std::sqrt(ss / n);
    fit.window_lo = std::max(t_lo, table.temperatures.front());
    fit.window_hi = std::min(t_hi, table.temperatures.back());
    return fit;
}

// Default tail window: the top decade of the sweep, pushed up if needed so
// T_lo >= 20x the largest model energy scale (the high-T power laws hold
// only far above every scale).
inline std::pair<double, double> default_tail_window(const OperatorSpec& spec,
                                                     double t_max) {
    const double lo = std::max(t_max / 10.0, 20.0 * max_energy_scale(spec));
    return {lo, t_max};
}

// Golden-section maximization of the exact indirect-model C_2 over gamma in
// [1e-6, 3 w2] at fixed (theta, w1, w2, T). A 50-point pre-scan guards
// against flat or multimodal objectives before the local search runs.
inline double find_optimal_gamma(double theta, double omega1, double omega2, double T) {
    if (!(T > 0)) throw std::invalid_argument("find_optimal_gamma: T must be > 0");
    const double g_lo = 1e-6;
    const double g_hi = 3.0 * omega2;

    auto c2_at = [&](double g) {
        const DensityMatrix tau =
            gibbs_state(build_operator(indirect_model(omega1, omega2, g, theta)), T);
        return local_coherence(tau, 1, 2);
    };

    constexpr int scan_n = 50;
    std::vector<double> gs(scan_n), vals(scan_n);
    for (int i = 0; i < scan_n; ++i) {
        gs[i] = g_lo + (g_hi - g_lo) * i / (scan_n - 1);
        vals[i] = c2_at(gs[i]);
    }
    const double vmax = *std::max_element(vals.begin(), vals.end());
    const double vmin = *std::min_element(vals.begin(), vals.end());
    if (vmax - vmin <= 1e-13 * std::max(1.0, vmax))
        throw std::domain_error("find_optimal_gamma: flat objective (C_2 does not "
                                "depend on gamma; is theta zero?)");

    std::vector<double> candidates;
    for (int i = 1; i + 1 < scan_n; ++i)
        if (vals[i] > vals[i - 1] && vals[i] > vals[i + 1]) candidates.push_back(gs[i]);
    if (candidates.size() > 1) {
        std::string msg = "find_optimal_gamma: objective is not unimodal; candidate "
                          "maxima near gamma = ";
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (i) msg += ", ";
            msg += format_csv_field(candidates[i]);
        }
        throw std::domain_error(msg);
    }

    const int imax = static_cast<int>(
        std::max_element(vals.begin(), vals.end()) - vals.begin());
    double a = gs[std::max(0, imax - 1)];
    double b = gs[std::min(scan_n - 1, imax + 1)];

    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = c2_at(x1);
    double f2 = c2_at(x2);
    while (b - a > 1e-6) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = c2_at(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = c2_at(x1);
        }
    }
    return (a + b) / 2;
}

// The parameter bundles behind the named figure presets. Grids default to
// 60 log-spaced temperatures over [1e-2, 1e1] times the reference frequency
// (1 for every preset).
inline std::vector<std::string> preset_names() {
    return {
        "fig1a-γ0.1-ω2_0.5", "fig1a-γ0.1-ω2_1.3", "fig1a-γ0.5-ω2_0.5", "fig1a-γ0.5-ω2_1.3",
        "fig1b-γ0.1-ω1_0.5", "fig1b-γ0.1-ω1_1.3", "fig1b-γ0.5-ω1_0.5", "fig1b-γ0.5-ω1_1.3",
        "fig1c-γ0.1-ω1_0.5", "fig1c-γ0.1-ω1_1.3", "fig1c-γ0.5-ω1_0.5", "fig1c-γ0.5-ω1_1.3",
        "afig2a-N1", "afig2a-N2", "afig2a-N4",
        "afig2b-N1", "afig2b-N4", "afig2b-N8",
        "afig3-N1", "afig3-N2", "afig3-N4", "afig3-N7",
    };
}

inline SweepConfig figure_preset(const std::string& name_in) {
    // Greek letters may be spelled as ASCII: γ -> g, ω -> w.
    std::string name;
    for (std::size_t i = 0; i < name_in.size();) {
        if (name_in.compare(i, 2, "γ") == 0) {  // γ
            name += 'g';
            i += 2;
        } else if (name_in.compare(i, 2, "ω") == 0) {  // ω
            name += 'w';
            i += 2;
        } else {
            name += name_in[i];
            ++i;
        }
    }

    SweepConfig cfg;
    cfg.t_min = 1e-2;
    cfg.t_max = 1e1;
    cfg.points = 60;
    cfg.spacing = GridSpacing::log;

    auto n_suffix = [&name, &name_in](const std::string& prefix) {
        try {
            return std::stoi(name.substr(prefix.size()));
        } catch (const std::exception&) {
            throw std::invalid_argument("figure_preset: unknown preset '" + name_in + "'");
        }
    };

    if (name.rfind("fig1a-", 0) == 0) {
        // direct model, omega1 = 1
        cfg.model = ModelTag::direct;
        cfg.params.omega1 = 1.0;
        if (name == "fig1a-g0.1-w2_0.5") { cfg.params.gamma = 0.1; cfg.params.omega2 = 0.5; }
        else if (name == "fig1a-g0.1-w2_1.3") { cfg.params.gamma = 0.1; cfg.params.omega2 = 1.3; }
        else if (name == "fig1a-g0.5-w2_0.5") { cfg.params.gamma = 0.5; cfg.params.omega2 = 0.5; }
        else if (name == "fig1a-g0.5-w2_1.3") { cfg.params.gamma = 0.5; cfg.params.omega2 = 1.3; }
        else throw std::invalid_argument("figure_preset: unknown preset '" + name_in + "'");
        return cfg;
    }
    if (name.rfind("fig1b-", 0) == 0) {
        // indirect model, omega2 = 1, theta = gamma
        cfg.model = ModelTag::indirect;
        cfg.params.omega2 = 1.0;
        if (name == "fig1b-g0.1-w1_0.5") { cfg.params.gamma = 0.1; cfg.params.omega1 = 0.5; }
        else if (name == "fig1b-g0.1-w1_1.3") { cfg.params.gamma = 0.1; cfg.params.omega1 = 1.3; }
        else if (name == "fig1b-g0.5-w1_0.5") { cfg.params.gamma = 0.5; cfg.params.omega1 = 0.5; }
        else if (name == "fig1b-g0.5-w1_1.3") { cfg.params.gamma = 0.5; cfg.params.omega1 = 1.3; }
        else throw std::invalid_argument("figure_preset: unknown preset '" + name_in + "'");
        cfg.params.theta = cfg.params.gamma;
        return cfg;
    }
    if (name.rfind("fig1c-", 0) == 0) {
        // transferred model, omega0 = 1, omega2 = 1.3, theta = gamma
        cfg.model = ModelTag::transferred;
        cfg.params.omega0 = 1.0;
        cfg.params.omega2 = 1.3;
        if (name == "fig1c-g0.1-w1_0.5") { cfg.params.gamma = 0.1; cfg.params.omega1 = 0.5; }
        else if (name == "fig1c-g0.1-w1_1.3") { cfg.params.gamma = 0.1; cfg.params.omega1 = 1.3; }
        else if (name == "fig1c-g0.5-w1_0.5") { cfg.params.gamma = 0.5; cfg.params.omega1 = 0.5; }
        else if (name == "fig1c-g0.5-w1_1.3") { cfg.params.gamma = 0.5; cfg.params.omega1 = 1.3; }
        else throw std::invalid_argument("figure_preset: unknown preset '" + name_in + "'");
        cfg.params.theta = cfg.params.gamma;
        return cfg;
    }
    if (name.rfind("afig2a-N", 0) == 0) {
        // direct-N: omega1 = 1, omega_j = 1.3, gamma_j = 0.5
        const int n = n_suffix("afig2a-N");
        if (n != 1 && n != 2 && n != 4)
            throw std::invalid_argument("figure_preset: unknown preset '" + name_in + "'");
        cfg.model = ModelTag::direct_N;
        cfg.params.omega1 = 1.0;
        cfg.params.omega_sources.assign(n, 1.3);
        cfg.params.gamma_sources.assign(n, 0.5);
        return cfg;
    }
    if (name.rfind("afig2b-N", 0) == 0) {
        // indirect-N: omega_T = 1, omega_j = 0.5, gamma_j = theta_j = 0.5
        const int n = n_suffix("afig2b-N");
        if (n != 1 && n != 4 && n != 8)
            throw std::invalid_argument("figure_preset: unknown preset '" + name_in + "'");
        cfg.model = ModelTag::indirect_N;
        cfg.params.omega1 = 1.0;  // target frequency
        cfg.params.omega_sources.assign(n, 0.5);
        cfg.params.gamma_sources.assign(n, 0.5);
        cfg.params.theta_sources.assign(n, 0.5);
        return cfg;
    }
    if (name.rfind("afig3-N", 0) == 0) {
        // transferred-N: omega0 = 1, omega1 = 0.5, omega_j = 1.3, gamma_j = 0.5, theta = 0.5
        const int n = n_suffix("afig3-N");
        if (n != 1 && n != 2 && n != 4 && n != 7)
            throw std::invalid_argument("figure_preset: unknown preset '" + name_in + "'");
        cfg.model = ModelTag::transferred_N;
        cfg.params.omega0 = 1.0;
        cfg.params.omega1 = 0.5;
        cfg.params.theta = 0.5;
        cfg.params.omega_sources.assign(n, 1.3);
        cfg.params.gamma_sources.assign(n, 0.5);
        return cfg;
    }
    throw std::invalid_argument("figure_preset: unknown preset '" + name_in + "'");
}

}  // namespace spincoh
