// verify.hpp — the verification battery: every acceptance-style check of the
// library (symmetry => zero coherence on random Hamiltonians, exact vs
// closed-form grids, high-T tail fits, ground-state structure, collective
// enhancement, determinism), runnable from the CLI and from the test suite.

#pragma once

#include "spincoh/analytic.hpp"
#include "spincoh/coherence.hpp"
#include "spincoh/models.hpp"
#include "spincoh/sweep.hpp"
#include "spincoh/thermal.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace spincoh {

struct CheckResult {
    std::string name;
    bool passed{false};
    double deviation{0.0};  // worst measured deviation for the check
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Random Hamiltonian commuting with the global Z2 generator: every term has
// an even number of X/Y axes. Coefficients are uniform in [-2, 2].
inline OperatorSpec random_z2_symmetric_spec(std::mt19937_64& rng, int n_sites) {
    std::uniform_int_distribution<int> n_terms_dist(1, 6);
    std::uniform_int_distribution<int> axis_dist(0, 3);
    std::uniform_real_distribution<double> coeff_dist(-2.0, 2.0);

    OperatorSpec spec;
    spec.n_sites = n_sites;
    const int n_terms = n_terms_dist(rng);
    for (int t = 0; t < n_terms; ++t) {
        PauliString p;
        do {
            p.axes.clear();
            for (int s = 0; s < n_sites; ++s)
                p.axes.push_back(static_cast<PauliAxis>(axis_dist(rng)));
        } while (xy_weight(p) % 2 != 0);
        p.coefficient = coeff_dist(rng);
        spec.terms.push_back(std::move(p));
    }
    return spec;
}

namespace detail {

inline std::string fmt(double v) { return format_csv_field(v); }

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    const double l0 = std::log10(lo);
    const double step = (std::log10(hi) - l0) / (n - 1);
    for (int i = 0; i < n; ++i) v[i] = std::pow(10.0, l0 + step * i);
    return v;
}

}  // namespace detail

// Criteria 1 + 2: engine C_1 against the closed form on the full parameter/
// temperature grid, and vanishing partner coherence C_2.
inline std::pair<CheckResult, CheckResult> check_exact_formula_grid() {
    using detail::fmt;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> gammas = {0.1, 0.5, 2.0};
    const std::vector<double> omega1s = {0.5, 1.0};
    const std::vector<double> omega2s = {0.5, 1.3};
    const std::vector<double> ts = detail::logspace(1e-2, 1e2, 25);

    double worst_c1 = 0.0, worst_c2 = 0.0;
    for (double g : gammas)
        for (double w1 : omega1s)
            for (double w2 : omega2s) {
                const Spectrum s = eig_hermitian(build_operator(direct_model(w1, w2, g)));
                for (double t : ts) {
                    const DensityMatrix tau = gibbs_state(s, t);
                    const double c1 = local_coherence(tau, 0, 2);
                    const double c2 = local_coherence(tau, 1, 2);
                    worst_c1 = std::max(worst_c1, std::abs(c1 - c1_direct_exact(g, w1, w2, t)));
                    worst_c2 = std::max(worst_c2, c2);
                }
            }
    const double elapsed = detail::seconds_since(t0);

    CheckResult c1res{"criterion-1 exact-formula equivalence",
                      worst_c1 <= 1e-10 && elapsed < 10.0, worst_c1,
                      "max |C1_engine - C1_closed_form| = " + fmt(worst_c1) +
                          " (tol 1e-10) over 300 grid points; " + fmt(elapsed) + " s"};
    CheckResult c2res{"criterion-2 vanishing partner coherence", worst_c2 <= 1e-12, worst_c2,
                      "max C2 of the direct model = " + fmt(worst_c2) + " (tol 1e-12)"};
    return {c1res, c2res};
}

// Criterion 3: low-T plateau gamma / sqrt(gamma^2 + omega1^2) at T = 1e-3.
inline CheckResult check_lowT_plateau() {
    using detail::fmt;
    double worst = 0.0;
    for (auto [g, w1] : std::vector<std::pair<double, double>>{{0.1, 1}, {0.5, 1}, {2, 1}}) {
        const DensityMatrix tau = gibbs_state(build_operator(direct_model(w1, 1.3, g)), 1e-3);
        const double plateau = g / std::sqrt(g * g + w1 * w1);
        worst = std::max(worst, std::abs(local_coherence(tau, 0, 2) - plateau));
    }
    return {"criterion-3 low-T plateau", worst <= 1e-6, worst,
            "max |C1(T=1e-3) - g/sqrt(g^2+w1^2)| = " + fmt(worst) + " (tol 1e-6)"};
}

// Criterion 4: fitted high-T tail exponents and prefactors over T in [50, 500].
inline CheckResult check_highT_tails() {
    using detail::fmt;
    struct Case {
        SweepConfig cfg;
        int site;
        double expect_exponent, exponent_tol, expect_prefactor;
        const char* label;
    };
    std::vector<Case> cases;
    {
        SweepConfig c;
        c.model = ModelTag::direct;
        c.params.omega1 = 1.0; c.params.omega2 = 1.3; c.params.gamma = 0.5;
        cases.push_back({c, 0, -2.0, 0.01, 0.5 * 1.3 / 4, "direct"});
    }
    {
        SweepConfig c;
        c.model = ModelTag::indirect;
        c.params.omega1 = 0.5; c.params.omega2 = 1.0;
        c.params.gamma = 0.5; c.params.theta = 0.5;
        cases.push_back({c, 1, -3.0, 0.02, 0.5 * 0.5 * 1.0 / 24, "indirect"});
    }
    {
        SweepConfig c;
        c.model = ModelTag::transferred;
        c.params.omega0 = 1.0; c.params.omega1 = 0.5; c.params.omega2 = 1.3;
        c.params.gamma = 0.5; c.params.theta = 0.5;
        cases.push_back({c, 0, -3.0, 0.02, 0.5 * 0.5 * 1.3 / 8, "transferred"});
    }
    {
        SweepConfig c;
        c.model = ModelTag::direct_N;
        c.params.omega1 = 1.0;
        c.params.omega_sources.assign(4, 1.3);
        c.params.gamma_sources.assign(4, 0.5);
        cases.push_back({c, 0, -2.0, 0.01, 2.0 * 1.3 / 4, "direct-N4"});
    }

    bool ok = true;
    double worst = 0.0;
    std::string detail;
    for (auto& cs : cases) {
        cs.cfg.t_min = 50.0;
        cs.cfg.t_max = 500.0;
        cs.cfg.points = 30;
        cs.cfg.spacing = GridSpacing::log;
        const SweepTable table = run_sweep(cs.cfg);
        const FitResult fit = fit_power_tail(table, cs.site, 50.0, 500.0);
        const double exp_dev = std::abs(fit.exponent - cs.expect_exponent);
        const double pre_dev = std::abs(fit.prefactor / cs.expect_prefactor - 1.0);
        ok = ok && exp_dev <= cs.exponent_tol && pre_dev <= 0.03;
        worst = std::max(worst, pre_dev);
        if (!detail.empty()) detail += "; ";
        detail += std::string(cs.label) + ": exp " + fmt(fit.exponent) + " (want " +
                  fmt(cs.expect_exponent) + " +- " + fmt(cs.exponent_tol) + "), pref " +
                  fmt(fit.prefactor) + " (want " + fmt(cs.expect_prefactor) + " +- 3%)";
    }
    return {"criterion-4 high-T power laws", ok, worst, detail};
}

// Criterion 5: random Z2-symmetric Hamiltonians carry no local coherence.
inline CheckResult check_symmetry_random(std::uint64_t seed) {
    using detail::fmt;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(1, 4);
    double worst = 0.0;
    bool symmetric_all = true;
    for (int i = 0; i < 200; ++i) {
        const OperatorSpec spec = random_z2_symmetric_spec(rng, n_dist(rng));
        symmetric_all = symmetric_all && is_z2_symmetric(spec);
        for (double t : {0.05, 0.5, 5.0}) {
            const CoherenceProfile prof = coherence_profile(spec, t);
            for (double c : prof.per_site) worst = std::max(worst, c);
        }
    }
    const double elapsed = detail::seconds_since(t0);
    return {"criterion-5 Z2 symmetry implies zero coherence",
            symmetric_all && worst <= 1e-10 && elapsed < 60.0, worst,
            "200 random symmetric specs (n <= 4), max coherence = " + fmt(worst) +
                " (tol 1e-10) at T in {0.05, 0.5, 5}; " + fmt(elapsed) + " s"};
}

// Criterion 6: the XYZ family is symmetric for any couplings.
inline CheckResult check_xyz_family(std::uint64_t seed) {
    using detail::fmt;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coupling(-2.0, 2.0);
    std::uniform_real_distribution<double> freq(0.5, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const OperatorSpec spec = xyz_chain_model(freq(rng), freq(rng), coupling(rng),
                                                  coupling(rng), coupling(rng));
        for (double t : {0.05, 0.5, 5.0}) {
            const CoherenceProfile prof = coherence_profile(spec, t);
            for (double c : prof.per_site) worst = std::max(worst, c);
        }
    }
    return {"criterion-6 XYZ chain zero coherence", worst <= 1e-12, worst,
            "50 random (gx, gy, gz) triples, max coherence = " + fmt(worst) + " (tol 1e-12)"};
}

// Criterion 7: direct ground state is a product state; indirect is entangled.
inline CheckResult check_ground_state_structure() {
    using detail::fmt;
    double worst_direct = 0.0;   // distance of reduced purities from 1
    double worst_indirect = 1.0; // largest site-0 purity (must stay below 1 - 1e-6)
    for (auto [g, w2] : std::vector<std::pair<double, double>>{
             {0.1, 0.5}, {0.1, 1.3}, {0.5, 0.5}, {0.5, 1.3}}) {
        const GroundStateInfo gs = ground_state(build_operator(direct_model(1.0, w2, g)));
        for (double p : gs.reduced_purities)
            worst_direct = std::max(worst_direct, std::abs(p - 1.0));
    }
    for (auto [g, w1] : std::vector<std::pair<double, double>>{
             {0.1, 0.5}, {0.1, 1.3}, {0.5, 0.5}, {0.5, 1.3}}) {
        const GroundStateInfo gs = ground_state(build_operator(indirect_model(w1, 1.0, g, g)));
        worst_indirect = std::min(worst_indirect, 1.0 - gs.reduced_purities[0]);
    }
    const bool ok = worst_direct <= 1e-10 && worst_indirect > 1e-6;
    return {"criterion-7 ground-state structure", ok, worst_direct,
            "direct: max |purity - 1| = " + fmt(worst_direct) +
                " (tol 1e-10); indirect: min (1 - purity_site0) = " + fmt(worst_indirect) +
                " (must exceed 1e-6)"};
}

// Criterion 8: the numerical optimum of C_2 against the closed-form optimal
// coupling, and the size of the improvement over gamma = omega1.
inline CheckResult check_optimal_coupling() {
    using detail::fmt;
    bool ok = true;
    double worst = 0.0;
    std::string detail;
    for (const auto& params : std::vector<std::array<double, 3>>{
             {0.3, 0.8, 1.0}, {0.2, 0.5, 1.0}}) {
        const double th = params[0], w1 = params[1], w2 = params[2];
        const double g_star = find_optimal_gamma(th, w1, w2, 0.01);
        const double g_formula = gamma_opt(th, w1, w2);
        const double rel = std::abs(g_star / g_formula - 1.0);

        auto c2_at = [th, w1, w2](double g) {
            const DensityMatrix tau =
                gibbs_state(build_operator(indirect_model(w1, w2, g, th)), 0.01);
            return local_coherence(tau, 1, 2);
        };
        const double improvement = c2_at(g_star) / c2_at(w1) - 1.0;

        ok = ok && rel <= 0.15 && improvement <= 0.10 && improvement >= -1e-9;
        worst = std::max(worst, rel);
        if (!detail.empty()) detail += "; ";
        detail += "(th=" + fmt(th) + ", w1=" + fmt(w1) + ", w2=" + fmt(w2) + "): argmax " +
                  fmt(g_star) + " vs formula " + fmt(g_formula) + ", rel dev " + fmt(rel) +
                  " (tol 0.15), improvement over g=w1 " + fmt(improvement) + " (tol 0.10)";
    }
    return {"criterion-8 optimal coupling", ok, worst, detail};
}

// Criterion 9: coupling N sources is equivalent to one source with the summed
// coupling, and the transferred coherence saturates in N.
inline CheckResult check_collective_enhancement() {
    using detail::fmt;
    const DensityMatrix tau_n = gibbs_state(
        build_operator(direct_model_N(1.0, std::vector<double>(4, 1.3),
                                      std::vector<double>(4, 0.25))),
        0.01);
    const DensityMatrix tau_1 = gibbs_state(build_operator(direct_model(1.0, 1.3, 1.0)), 0.01);
    const double additivity_dev =
        std::abs(local_coherence(tau_n, 0, 5) - local_coherence(tau_1, 0, 2));

    const DensityMatrix tau_t = gibbs_state(
        build_operator(transferred_model_N(1.0, 0.5, std::vector<double>(4, 1.3),
                                           std::vector<double>(4, 0.5), 0.5)),
        0.01);
    const double c0 = local_coherence(tau_t, 0, 6);
    const double target = 0.5 / std::sqrt(0.5 * 0.5 + 1.0);
    const double saturation_dev = std::abs(c0 / target - 1.0);

    const bool ok = additivity_dev <= 1e-3 && saturation_dev <= 0.03;
    return {"criterion-9 collective enhancement", ok,
            std::max(additivity_dev, saturation_dev),
            "N-additivity |C1(N=4, g_j=0.25) - C1(g=1)| = " + fmt(additivity_dev) +
                " (tol 1e-3); saturation |C0(N=4)/C0(inf) - 1| = " + fmt(saturation_dev) +
                " (tol 0.03)"};
}

// Criterion 10: the transfer ratio C_0/C_1 = x / sqrt(1 + C_1^2 x^2), x = theta/omega0.
inline CheckResult check_ratio_law() {
    using detail::fmt;
    const double g = 0.5, w1 = 1.0, w2 = 1.3, w0 = 1.0;
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0}) {
        const double th = x * w0;
        const DensityMatrix tau_d = gibbs_state(build_operator(direct_model(w1, w2, g)), 1e-3);
        const double c1 = local_coherence(tau_d, 0, 2);
        const DensityMatrix tau_t =
            gibbs_state(build_operator(transferred_model(w0, w1, w2, g, th)), 1e-3);
        const double c0 = local_coherence(tau_t, 0, 3);
        const double predicted = x / std::sqrt(1.0 + c1 * c1 * x * x);
        worst = std::max(worst, std::abs(c0 / c1 - predicted));
    }
    return {"criterion-10 transfer ratio law", worst <= 1e-2, worst,
            "max |C0/C1 - x/sqrt(1+C1^2 x^2)| = " + fmt(worst) +
                " (tol 1e-2) for x in {0.5, 1, 2}"};
}

// Criterion 11: byte-identical CSV across reruns, identical tables serial vs
// parallel.
inline CheckResult check_determinism() {
    using detail::fmt;
    const SweepConfig cfg = figure_preset("fig1a-g0.5-w2_1.3");
    const SweepTable serial_a = run_sweep(cfg, /*parallel=*/false);
    const SweepTable serial_b = run_sweep(cfg, /*parallel=*/false);
    const SweepTable parallel = run_sweep(cfg, /*parallel=*/true);

    const std::string csv_a = to_csv(serial_a);
    const std::string csv_b = to_csv(serial_b);
    const bool bytes_equal = csv_a == csv_b;
    const double table_dev =
        (serial_a.coherences - parallel.coherences).cwiseAbs().maxCoeff();
    const bool ok = bytes_equal && table_dev == 0.0;
    return {"criterion-11 determinism", ok, table_dev,
            std::string("rerun CSV byte-identical: ") + (bytes_equal ? "yes" : "no") +
                "; serial vs parallel max |diff| = " + fmt(table_dev) + " (must be 0)"};
}

// N = 1 reduction identities of the generalized models. The indirect-N
// Hamiltonian lists the target first, so it reduces to the two-site indirect
// model with its sites swapped.
inline CheckResult check_n1_reduction() {
    using detail::fmt;
    double worst = 0.0;

    const DenseOperator dn = build_operator(direct_model_N(1.0, {1.3}, {0.5}));
    const DenseOperator d2 = build_operator(direct_model(1.0, 1.3, 0.5));
    worst = std::max(worst, (dn - d2).cwiseAbs().maxCoeff());

    const DenseOperator tn =
        build_operator(transferred_model_N(1.0, 0.5, {1.3}, {0.5}, 0.5));
    const DenseOperator t3 = build_operator(transferred_model(1.0, 0.5, 1.3, 0.5, 0.5));
    worst = std::max(worst, (tn - t3).cwiseAbs().maxCoeff());

    // indirect: swap the two sites of the two-site model, then compare.
    OperatorSpec swapped = indirect_model(0.7, 1.0, 0.3, 0.25);
    for (auto& term : swapped.terms) std::swap(term.axes[0], term.axes[1]);
    std::swap(swapped.site_labels[0], swapped.site_labels[1]);
    const DenseOperator in = build_operator(indirect_model_N(1.0, {0.7}, {0.3}, {0.25}));
    worst = std::max(worst, (in - build_operator(swapped)).cwiseAbs().maxCoeff());

    const double c_target =
        local_coherence(gibbs_state(in, 0.1), 0, 2);
    const double c2_twosite = local_coherence(
        gibbs_state(build_operator(indirect_model(0.7, 1.0, 0.3, 0.25)), 0.1), 1, 2);
    worst = std::max(worst, std::abs(c_target - c2_twosite));

    return {"reduction N=1", worst <= 1e-12, worst,
            "max entrywise / coherence deviation = " + fmt(worst) + " (tol 1e-12)"};
}

// Structural Gibbs-state sanity across the catalog: [tau, H] = 0 and unit trace.
inline CheckResult check_gibbs_sanity() {
    using detail::fmt;
    const std::vector<OperatorSpec> specs = {
        direct_model(1.0, 1.3, 0.5),
        indirect_model(0.5, 1.0, 0.5, 0.5),
        transferred_model(1.0, 0.5, 1.3, 0.5, 0.5),
        xyz_chain_model(1.0, 1.0, 0.7, 0.3, 0.2),
        direct_model_N(1.0, {1.3, 1.3, 1.3}, {0.5, 0.5, 0.5}),
    };
    double worst = 0.0;
    for (const auto& spec : specs) {
        const DenseOperator h = build_operator(spec);
        const Spectrum s = eig_hermitian(h);
        for (double t : {1e-3, 1.0, 1e3}) {
            const DensityMatrix tau = gibbs_state(s, t);
            worst = std::max(worst, commutator_frobenius(tau, h) / h.norm());
            worst = std::max(worst, std::abs(tau.trace().real() - 1.0));
            worst = std::max(worst, std::abs(tau.trace().imag()));
        }
    }
    return {"gibbs sanity", worst <= 1e-10, worst,
            "max of ||[tau,H]||_F/||H||_F and |Tr tau - 1| = " + fmt(worst) + " (tol 1e-10)"};
}

// Run the whole battery. Checks named criterion-1 .. criterion-11 implement
// the acceptance gate; the remaining checks are structural cross-checks.
inline VerifyReport verify_suite(std::uint64_t seed) {
    VerifyReport report;
    auto [c1, c2] = check_exact_formula_grid();
    report.checks.push_back(c1);
    report.checks.push_back(c2);
    report.checks.push_back(check_lowT_plateau());
    report.checks.push_back(check_highT_tails());
    report.checks.push_back(check_symmetry_random(seed));
    report.checks.push_back(check_xyz_family(seed + 1));
    report.checks.push_back(check_ground_state_structure());
    report.checks.push_back(check_optimal_coupling());
    report.checks.push_back(check_collective_enhancement());
    report.checks.push_back(check_ratio_law());
    report.checks.push_back(check_determinism());
    report.checks.push_back(check_n1_reduction());
    report.checks.push_back(check_gibbs_sanity());
    return report;
}

}  // namespace spincoh
