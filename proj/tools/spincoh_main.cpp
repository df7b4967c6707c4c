// spincoh — command-line surface: temperature sweeps to CSV, single-point
// coherence profiles, high-T tail fits, optimal-coupling search, figure
// presets, and the verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 numerical-contract violation,
// 3 verification-suite failure.

#include "spincoh/spincoh.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace spincoh;

int site_cap_from_env() {
    const char* raw = std::getenv("SPINCOH_SITE_CAP");
    if (raw == nullptr) return default_site_cap;
    try {
        const int cap = std::stoi(raw);
        if (cap < 1) throw std::invalid_argument("cap");
        return cap;
    } catch (const std::exception&) {
        throw CLI::ValidationError("SPINCOH_SITE_CAP must be a positive integer");
    }
}

// Plain-text config: one `key = value` per line, `#` starts a comment.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--config", "cannot open config file '" + path + "'");
    auto trim = [](const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "expected 'key = value', got: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw CLI::ValidationError("--config", "expected 'key = value', got: " + line);
        entries.emplace_back(key, value);
    }
    return entries;
}

// Command-line flags take precedence: config entries whose flag already
// appears on the command line are dropped, the rest are appended as flags.
std::vector<std::string> merge_config_args(std::vector<std::string> args) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;
    for (const auto& [key, value] : read_config_file(config_path)) {
        const std::string flag = "--" + key;
        bool given = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
        if (!given) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

// Shared model flags. Scalar source parameters are replicated --n-sources
// times for the N models.
struct ModelFlags {
    std::string model{"direct"};
    double omega0{1.0};
    double omega1{1.0};
    double omega2{1.0};
    double gamma{0.0};
    double theta{0.0};
    double gamma_x{0.0}, gamma_y{0.0}, gamma_z{0.0};
    double omega_src{1.0};
    int n_sources{1};

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "Model tag: direct, indirect, transferred, "
                                          "direct-N, indirect-N, transferred-N, xyz")
            ->check(CLI::IsMember({"direct", "indirect", "transferred", "direct-N",
                                   "indirect-N", "transferred-N", "xyz"}))
            ->capture_default_str();
        cmd->add_option("--omega0", omega0, "Frequency of the transferred-model target TLS")
            ->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--omega1", omega1, "Frequency of the first TLS (N models: target)")
            ->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--omega2", omega2, "Frequency of the second TLS")
            ->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--gamma", gamma, "Coupling gamma (N models: every gamma_j)")
            ->capture_default_str();
        cmd->add_option("--theta", theta, "Coupling theta (indirect-N: every theta_j)")
            ->capture_default_str();
        cmd->add_option("--gamma-x", gamma_x, "XYZ chain x-x coupling")->capture_default_str();
        cmd->add_option("--gamma-y", gamma_y, "XYZ chain y-y coupling")->capture_default_str();
        cmd->add_option("--gamma-z", gamma_z, "XYZ chain z-z coupling")->capture_default_str();
        cmd->add_option("--omega-src", omega_src, "Source TLS frequency (N models)")
            ->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--n-sources", n_sources, "Number of source TLSs (N models)")
            ->check(CLI::Range(1, 64))->capture_default_str();
    }

    std::pair<ModelTag, ModelParams> resolve() const {
        const ModelTag tag = model_tag_from_string(model);
        ModelParams p;
        p.omega0 = omega0;
        p.omega1 = omega1;
        p.omega2 = omega2;
        p.gamma = gamma;
        p.theta = theta;
        p.gamma_x = gamma_x;
        p.gamma_y = gamma_y;
        p.gamma_z = gamma_z;
        if (tag == ModelTag::direct_N || tag == ModelTag::indirect_N ||
            tag == ModelTag::transferred_N) {
            p.omega_sources.assign(n_sources, omega_src);
            p.gamma_sources.assign(n_sources, gamma);
            p.theta_sources.assign(n_sources, theta);
        }
        return {tag, p};
    }
};

struct GridFlags {
    double tmin{1e-2};
    double tmax{1e1};
    int points{60};
    bool log_spacing{true};
    bool linear{false};

    void attach(CLI::App* cmd) {
        cmd->add_option("--tmin", tmin, "Lowest temperature")
            ->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--tmax", tmax, "Highest temperature")
            ->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--points", points, "Number of grid points")
            ->check(CLI::Range(2, 100000))->capture_default_str();
        cmd->add_flag("--log", log_spacing, "Log-spaced temperature grid (default)");
        cmd->add_flag("--linear", linear, "Linearly spaced temperature grid");
    }

    void apply(SweepConfig& cfg) const {
        cfg.t_min = tmin;
        cfg.t_max = tmax;
        cfg.points = points;
        cfg.spacing = linear ? GridSpacing::linear : GridSpacing::log;
    }
};

void write_or_print(const SweepTable& table, const std::string& out) {
    if (out.empty())
        std::cout << to_csv(table);
    else
        emit_csv(table, out);
}

void print_report(const VerifyReport& report) {
    for (const auto& c : report.checks)
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    const int failed = static_cast<int>(
        std::count_if(report.checks.begin(), report.checks.end(),
                      [](const CheckResult& c) { return !c.passed; }));
    std::cout << report.checks.size() - failed << "/" << report.checks.size()
              << " checks passed\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gibbs states of coupled two-level systems and their local coherence"};
    app.require_subcommand(1);

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "Temperature sweep of per-site coherence, CSV out");
    sweep_cmd->add_option("--config", "Config file: one key = value per line, # comments; flags override");
    ModelFlags sweep_model;
    GridFlags sweep_grid;
    sweep_model.attach(sweep_cmd);
    sweep_grid.attach(sweep_cmd);
    std::vector<int> sweep_sites;
    std::string sweep_out;
    bool sweep_serial = false;
    sweep_cmd->add_option("--sites", sweep_sites, "Sites of interest (default: all)");
    sweep_cmd->add_option("--out", sweep_out, "Output CSV path (default: stdout)");
    sweep_cmd->add_flag("--serial", sweep_serial, "Evaluate temperatures serially");

    // --- coherence ---
    auto* coh_cmd = app.add_subcommand("coherence", "Per-site coherence at one temperature");
    coh_cmd->add_option("--config", "Config file: one key = value per line, # comments; flags override");
    ModelFlags coh_model;
    coh_model.attach(coh_cmd);
    double coh_temperature = 1.0;
    std::string coh_out;
    coh_cmd->add_option("--temperature,-T", coh_temperature, "Temperature")
        ->check(CLI::PositiveNumber)->capture_default_str();
    coh_cmd->add_option("--out", coh_out, "Output CSV path (default: stdout)");

    // --- fit-tail ---
    auto* fit_cmd = app.add_subcommand("fit-tail", "Power-law fit of the high-T coherence tail");
    fit_cmd->add_option("--config", "Config file: one key = value per line, # comments; flags override");
    ModelFlags fit_model;
    GridFlags fit_grid;
    fit_grid.tmin = 10.0;
    fit_grid.tmax = 1000.0;
    fit_model.attach(fit_cmd);
    fit_grid.attach(fit_cmd);
    int fit_site = 0;
    double fit_lo = 0.0, fit_hi = 0.0;
    fit_cmd->add_option("--site", fit_site, "Site whose coherence column is fitted")
        ->capture_default_str();
    fit_cmd->add_option("--fit-lo", fit_lo, "Fit window lower edge (default: top decade, "
                                            ">= 20x the largest model energy scale)");
    fit_cmd->add_option("--fit-hi", fit_hi, "Fit window upper edge (default: tmax)");

    // --- opt-gamma ---
    auto* opt_cmd = app.add_subcommand("opt-gamma", "Search the coupling maximizing indirect C_2");
    opt_cmd->add_option("--config", "Config file: one key = value per line, # comments; flags override");
    double opt_theta = 0.3, opt_omega1 = 0.8, opt_omega2 = 1.0, opt_temperature = 0.01;
    opt_cmd->add_option("--theta", opt_theta, "Exchange coupling theta")->capture_default_str();
    opt_cmd->add_option("--omega1", opt_omega1, "First TLS frequency")
        ->check(CLI::PositiveNumber)->capture_default_str();
    opt_cmd->add_option("--omega2", opt_omega2, "Second TLS frequency")
        ->check(CLI::PositiveNumber)->capture_default_str();
    opt_cmd->add_option("--temperature,-T", opt_temperature, "Temperature")
        ->check(CLI::PositiveNumber)->capture_default_str();

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    std::uint64_t verify_seed = 42;
    verify_cmd->add_option("--seed", verify_seed, "Seed for the randomized checks")
        ->capture_default_str();

    // --- preset ---
    auto* preset_cmd = app.add_subcommand("preset", "Run a named figure preset sweep");
    std::string preset_name;
    std::string preset_out;
    bool preset_list = false;
    std::optional<int> preset_points;
    preset_cmd->add_option("name", preset_name, "Preset name (see --list)");
    preset_cmd->add_option("--out", preset_out, "Output CSV path (default: stdout)");
    preset_cmd->add_flag("--list", preset_list, "List available preset names");
    preset_cmd->add_option("--points", preset_points, "Override the grid point count")
        ->check(CLI::Range(2, 100000));

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = merge_config_args(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const int cap = site_cap_from_env();

        if (sweep_cmd->parsed()) {
            auto [tag, params] = sweep_model.resolve();
            SweepConfig cfg;
            cfg.model = tag;
            cfg.params = params;
            sweep_grid.apply(cfg);
            cfg.sites_of_interest = sweep_sites;
            write_or_print(run_sweep(cfg, !sweep_serial, cap), sweep_out);
            return 0;
        }

        if (coh_cmd->parsed()) {
            auto [tag, params] = coh_model.resolve();
            const OperatorSpec spec = make_model(tag, params);
            const CoherenceProfile prof = coherence_profile(spec, coh_temperature, cap);
            std::string csv = "T";
            for (int s = 0; s < spec.n_sites; ++s) csv += ",C_site" + std::to_string(s);
            csv += "\n" + format_csv_field(prof.temperature);
            for (double c : prof.per_site) csv += "," + format_csv_field(c);
            csv += "\n";
            if (coh_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream f(coh_out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open '" + coh_out + "'");
                f << csv;
            }
            return 0;
        }

        if (fit_cmd->parsed()) {
            auto [tag, params] = fit_model.resolve();
            SweepConfig cfg;
            cfg.model = tag;
            cfg.params = params;
            fit_grid.apply(cfg);
            const SweepTable table = run_sweep(cfg, true, cap);
            double lo = fit_lo, hi = fit_hi;
            if (lo <= 0 || hi <= 0) {
                const auto window = default_tail_window(make_model(tag, params), cfg.t_max);
                if (lo <= 0) lo = window.first;
                if (hi <= 0) hi = window.second;
            }
            const FitResult fit = fit_power_tail(table, fit_site, lo, hi);
            std::cout << "exponent = " << format_csv_field(fit.exponent) << "\n"
                      << "prefactor = " << format_csv_field(fit.prefactor) << "\n"
                      << "rms_residual = " << format_csv_field(fit.rms_residual) << "\n"
                      << "window = [" << format_csv_field(fit.window_lo) << ", "
                      << format_csv_field(fit.window_hi) << "]\n";
            try {
                const AsymptoteLaw law = highT_asymptote(tag, params);
                std::cout << "expected_exponent = " << format_csv_field(law.exponent) << "\n";
                if (law.prefactor)
                    std::cout << "expected_prefactor = " << format_csv_field(*law.prefactor)
                              << "\n";
            } catch (const std::invalid_argument&) {
                // no closed-form law for this model; fit stands alone
            }
            return 0;
        }

        if (opt_cmd->parsed()) {
            const double g = find_optimal_gamma(opt_theta, opt_omega1, opt_omega2,
                                                opt_temperature);
            const DensityMatrix tau = gibbs_state(
                build_operator(indirect_model(opt_omega1, opt_omega2, g, opt_theta)),
                opt_temperature);
            std::cout << "optimal_gamma = " << format_csv_field(g) << "\n"
                      << "C2_at_optimum = " << format_csv_field(local_coherence(tau, 1, 2))
                      << "\n"
                      << "gamma_opt_formula = "
                      << format_csv_field(gamma_opt(opt_theta, opt_omega1, opt_omega2)) << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            const VerifyReport report = verify_suite(verify_seed);
            print_report(report);
            return report.all_passed() ? 0 : 3;
        }

        if (preset_cmd->parsed()) {
            if (preset_list) {
                for (const auto& n : preset_names()) std::cout << n << "\n";
                return 0;
            }
            if (preset_name.empty()) {
                std::cerr << "preset: a preset name is required (or --list)\n";
                return 1;
            }
            SweepConfig cfg;
            try {
                cfg = figure_preset(preset_name);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 1;
            }
            if (preset_points) cfg.points = *preset_points;
            write_or_print(run_sweep(cfg, true, cap), preset_out);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
