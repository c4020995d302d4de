#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "secap/model.hpp"
#include "secap/presets.hpp"
#include "secap/version.hpp"

// Command-line front end. All analysis lives in the library; this file only
// parses flags, resolves the scenario and streams CSV/report text.
//
// Exit codes: 0 success, 1 usage or config error, 2 validation threshold
// exceeded, 3 numerical error.

namespace {

using secap::ScenarioConfig;

struct SweepSpec {
    std::string text;
};

secap::IntSweep parse_int_sweep(const std::string& text) {
    secap::IntSweep sweep;
    const auto first = text.find(':');
    if (first == std::string::npos) {
        sweep.begin = sweep.end = std::stoi(text);
        return sweep;
    }
    const auto second = text.find(':', first + 1);
    sweep.begin = std::stoi(text.substr(0, first));
    if (second == std::string::npos) {
        sweep.end = std::stoi(text.substr(first + 1));
    } else {
        sweep.end = std::stoi(text.substr(first + 1, second - first - 1));
        sweep.step = std::stoi(text.substr(second + 1));
    }
    return sweep;
}

secap::RealSweep parse_real_sweep(const std::string& text) {
    secap::RealSweep sweep;
    const auto first = text.find(':');
    if (first == std::string::npos) {
        sweep.begin = sweep.end = std::stod(text);
        return sweep;
    }
    const auto second = text.find(':', first + 1);
    sweep.begin = std::stod(text.substr(0, first));
    if (second == std::string::npos) {
        sweep.end = std::stod(text.substr(first + 1));
    } else {
        sweep.end = std::stod(text.substr(first + 1, second - first - 1));
        sweep.step = std::stod(text.substr(second + 1));
    }
    return sweep;
}

secap::SystemKind parse_kind(const std::string& name) {
    if (name == "wiretap") return secap::SystemKind::Wiretap;
    if (name == "basic") return secap::SystemKind::BasicJammer;
    if (name == "an") return secap::SystemKind::AnJammer;
    throw std::invalid_argument("unknown system kind: " + name);
}

secap::GeometryChoice parse_geometry(const std::string& name) {
    if (name == "uca") return secap::GeometryChoice::Uca;
    if (name == "ula") return secap::GeometryChoice::Ula;
    if (name == "both") return secap::GeometryChoice::Both;
    throw std::invalid_argument("unknown geometry: " + name);
}

void add_scenario_options(CLI::App* sub, ScenarioConfig& cfg) {
    sub->set_config("--config", "", "flat key=value scenario file; flags win");
    sub->add_option("--pt-db", cfg.pt_db, "transmit power P_t [dB]")->capture_default_str();
    sub->add_option("--pj-db", cfg.pj_db, "jamming power P_j [dB]")->capture_default_str();
    sub->add_option("--rb", cfg.r_b, "Bob aperture radius [wavelengths]")->capture_default_str();
    sub->add_option("--re", cfg.r_e, "Eve aperture radius [wavelengths]")->capture_default_str();
    sub->add_option("--alpha-b", cfg.alpha_b, "gain Alice->Bob")->capture_default_str();
    sub->add_option("--alpha-e", cfg.alpha_e, "gain Alice->Eve")->capture_default_str();
    sub->add_option("--beta-b", cfg.beta_b, "gain Helen->Bob")->capture_default_str();
    sub->add_option("--beta-e", cfg.beta_e, "gain Helen->Eve")->capture_default_str();
    sub->add_option("--sigma2-b", cfg.sigma2_b, "Bob noise variance")->capture_default_str();
    sub->add_option("--sigma2-e", cfg.sigma2_e, "Eve noise variance")->capture_default_str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secrecy capacity of spatially-constrained multi-antenna systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", secap::kVersion);

    // saturation
    double sat_radius = 1.0;
    std::string sat_dim = "2d";
    std::string sat_out;
    auto* sat = app.add_subcommand("saturation", "saturation number of receive antennas");
    sat->add_option("--radius", sat_radius, "aperture radius [wavelengths]")->required();
    sat->add_option("--dim", sat_dim, "2d or 3d")->check(CLI::IsMember({"2d", "3d"}));
    sat->add_option("--out", sat_out, "output path (default stdout)");

    // capacity
    ScenarioConfig cap_cfg;
    std::string cap_kind = "wiretap";
    std::string cap_nb = "35";
    std::string cap_ne = "1:60";
    std::string cap_out;
    bool cap_compare = false;
    auto* cap = app.add_subcommand("capacity", "closed-form capacities and secrecy capacity");
    cap->add_option("--kind", cap_kind, "wiretap | basic | an")
        ->check(CLI::IsMember({"wiretap", "basic", "an"}));
    cap->add_option("--nb", cap_nb, "Bob antennas, value or sweep a:b[:step]");
    cap->add_option("--ne", cap_ne, "Eve antennas, value or sweep a:b[:step]");
    cap->add_flag("--compare", cap_compare, "emit all three systems at fixed --nb");
    add_scenario_options(cap, cap_cfg);
    cap->add_option("--out", cap_out, "output path (default stdout)");

    // worstcase
    ScenarioConfig wor_cfg;
    std::string wor_sweep = "re";
    std::string wor_range;
    std::string wor_kind;
    std::string wor_nb = "30";
    std::string wor_out;
    auto* wor = app.add_subcommand("worstcase",
                                   "worst-case secrecy capacity (infinite noise-free Eve)");
    wor->add_option("--sweep", wor_sweep, "sweep variable: re | pj")
        ->check(CLI::IsMember({"re", "pj"}));
    wor->add_option("--range", wor_range, "sweep range a:b[:step]");
    wor->add_option("--kind", wor_kind, "restrict to one system: wiretap | basic | an")
        ->check(CLI::IsMember({"wiretap", "basic", "an"}));
    wor->add_option("--nb", wor_nb, "Bob antennas");
    add_scenario_options(wor, wor_cfg);
    wor->add_option("--out", wor_out, "output path (default stdout)");

    // nbmin
    ScenarioConfig nbm_cfg;
    std::string nbm_range = "0.1:3.0:0.1";
    std::string nbm_out;
    auto* nbm = app.add_subcommand("nbmin",
                                   "minimum Bob antennas for a positive worst-case secrecy "
                                   "capacity, swept over r_e");
    nbm->add_option("--range", nbm_range, "r_e sweep a:b[:step]");
    add_scenario_options(nbm, nbm_cfg);
    nbm->add_option("--out", nbm_out, "output path (default stdout)");

    // optpower
    ScenarioConfig opt_cfg;
    opt_cfg.n_b = 30;
    std::optional<double> opt_pj_max;
    std::string opt_nb = "30";
    std::string opt_out;
    auto* opt = app.add_subcommand("optpower",
                                   "closed-form optimal jamming power, basic jammer");
    opt->add_option("--nb", opt_nb, "Bob antennas");
    double opt_pj_max_value = 0.0;
    auto* opt_pj_max_opt =
        opt->add_option("--pj-max", opt_pj_max_value, "jammer power constraint [dB]");
    add_scenario_options(opt, opt_cfg);
    opt->add_option("--out", opt_out, "output path (default stdout)");

    // validate
    secap::ValidateOptions val_opts;
    std::string val_geometry = "uca";
    std::string val_out;
    std::uint64_t val_seed = 1;
    auto* val = app.add_subcommand("validate",
                                   "Monte-Carlo accuracy sweep against the closed forms");
    val->add_option("--figure", val_opts.figure, "9 (unjammed) or 10 (jammed)")
        ->check(CLI::Range(9, 10));
    val->add_option("--geometry", val_geometry, "uca | ula | both")
        ->check(CLI::IsMember({"uca", "ula", "both"}));
    val->add_option("--realizations", val_opts.realizations, "channel realizations per point")
        ->capture_default_str();
    val->add_option("--seed", val_seed, "master RNG seed")->capture_default_str();
    val->add_option("--threshold", val_opts.threshold,
                    "relative-gap gate; exceeding it exits with code 2")
        ->capture_default_str();
    val->add_option("--out", val_out, "output path (default stdout)");

    // figure
    int fig_number = 0;
    secap::FigureOptions fig_opts;
    std::string fig_geometry;
    std::string fig_out;
    std::uint64_t fig_seed = 1;
    auto* fig = app.add_subcommand("figure", "figure-data presets 3..10");
    fig->add_option("number", fig_number, "figure number (3..10)")->required();
    fig->add_option("--seed", fig_seed, "master RNG seed")->capture_default_str();
    fig->add_option("--realizations", fig_opts.realizations,
                    "channel realizations (figures 9 and 10)")
        ->capture_default_str();
    fig->add_option("--geometry", fig_geometry, "uca | ula | both (figures 9 and 10)")
        ->check(CLI::IsMember({"uca", "ula", "both"}));
    fig->add_option("--out", fig_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);

        if (sat->parsed()) {
            const secap::SpatialConstraint constraint(
                sat_radius, sat_dim == "3d" ? secap::ApertureDim::Spherical3D
                                            : secap::ApertureDim::Circular2D);
            emit(std::to_string(secap::saturation_number(constraint)) + "\n", sat_out);
        } else if (cap->parsed()) {
            if (cap_ne == "inf" || cap_ne == "infinite")
                throw std::invalid_argument(
                    "capacity: infinite N_e is the worst-case limit; use the worstcase "
                    "subcommand");
            const secap::IntSweep nb = parse_int_sweep(cap_nb);
            const secap::IntSweep ne = parse_int_sweep(cap_ne);
            secap::CsvDocument doc;
            if (cap_compare) {
                cap_cfg.n_b = nb.begin;
                doc = secap::cmd_capacity_compare(cap_cfg, ne);
            } else {
                doc = secap::cmd_capacity(parse_kind(cap_kind), cap_cfg, nb, ne);
            }
            emit(doc.to_string(), cap_out);
        } else if (wor->parsed()) {
            wor_cfg.n_b = parse_int_sweep(wor_nb).begin;
            std::optional<secap::SystemKind> kind;
            if (!wor_kind.empty()) kind = parse_kind(wor_kind);
            secap::CsvDocument doc;
            if (wor_sweep == "re") {
                const secap::RealSweep sweep =
                    wor_range.empty() ? secap::RealSweep{0.1, 3.0, 0.1}
                                      : parse_real_sweep(wor_range);
                doc = secap::cmd_worstcase_sweep_re(wor_cfg, sweep, kind);
            } else {
                const secap::RealSweep sweep =
                    wor_range.empty() ? secap::RealSweep{-10.0, 15.0, 0.25}
                                      : parse_real_sweep(wor_range);
                doc = secap::cmd_worstcase_sweep_pj(wor_cfg, sweep, kind);
            }
            emit(doc.to_string(), wor_out);
        } else if (nbm->parsed()) {
            emit(secap::cmd_nbmin(nbm_cfg, parse_real_sweep(nbm_range)).to_string(), nbm_out);
        } else if (opt->parsed()) {
            opt_cfg.n_b = parse_int_sweep(opt_nb).begin;
            if (opt_pj_max_opt->count() > 0) opt_pj_max = opt_pj_max_value;
            emit(secap::cmd_optpower(opt_cfg, opt_pj_max), opt_out);
        } else if (val->parsed()) {
            val_opts.geometry = parse_geometry(val_geometry);
            val_opts.seed = val_seed;
            const secap::ValidateOutcome outcome = secap::cmd_validate(val_opts);
            emit(outcome.csv.to_string(), val_out);
            if (outcome.threshold_exceeded) {
                std::cerr << "validate: relative gap " << outcome.max_rel_gap
                          << " exceeds threshold " << val_opts.threshold << "\n";
                return 2;
            }
        } else if (fig->parsed()) {
            fig_opts.seed = fig_seed;
            if (!fig_geometry.empty()) fig_opts.geometry = parse_geometry(fig_geometry);
            emit(secap::run_figure(fig_number, fig_opts).to_string(), fig_out);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
