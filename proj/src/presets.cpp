#include "secap/presets.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "secap/closed_form.hpp"
#include "secap/version.hpp"
#include "secap/worst_case.hpp"

namespace secap {

namespace {

const char* kind_name(SystemKind kind) {
    switch (kind) {
        case SystemKind::Wiretap: return "wiretap";
        case SystemKind::BasicJammer: return "basic";
        case SystemKind::AnJammer: return "an";
    }
    return "?";
}

const char* geometry_name(GeometryChoice choice) {
    switch (choice) {
        case GeometryChoice::Uca: return "uca";
        case GeometryChoice::Ula: return "ula";
        case GeometryChoice::Both: return "both";
    }
    return "?";
}

std::string sweep_text(const IntSweep& sweep) {
    return format_number(sweep.begin) + ":" + format_number(sweep.end) + ":" +
           format_number(sweep.step);
}

std::string sweep_text(const RealSweep& sweep) {
    return format_number(sweep.begin) + ":" + format_number(sweep.end) + ":" +
           format_number(sweep.step);
}

void echo_link_config(CsvDocument& doc, const ScenarioConfig& cfg, bool worst_case_eve) {
    doc.add_meta("version", kVersion);
    doc.add_meta("alpha_b", cfg.alpha_b);
    doc.add_meta("alpha_e", cfg.alpha_e);
    doc.add_meta("beta_b", cfg.beta_b);
    doc.add_meta("beta_e", cfg.beta_e);
    doc.add_meta("pt_db", cfg.pt_db);
    doc.add_meta("pj_db", cfg.pj_db);
    doc.add_meta("sigma2_b", cfg.sigma2_b);
    doc.add_meta("sigma2_e", worst_case_eve ? std::string("0 (worst-case limit)")
                                            : format_number(cfg.sigma2_e));
    doc.add_meta("r_b", cfg.r_b);
    doc.add_meta("r_e", cfg.r_e);
    if (worst_case_eve) doc.add_meta("n_e", "infinite (worst-case limit)");
}

CsvDocument with_preset_meta(const std::string& preset, const CsvDocument& inner) {
    CsvDocument doc;
    doc.add_meta("preset", preset);
    for (const auto& [key, value] : inner.meta()) doc.add_meta(key, value);
    doc.set_columns(inner.columns());
    for (const auto& row : inner.rows()) doc.add_row(row);
    return doc;
}

}  // namespace

SystemParams make_params(SystemKind kind, const ScenarioConfig& cfg, int n_e) {
    return SystemParams(
        kind, LinkGains(cfg.alpha_b, cfg.alpha_e, cfg.beta_b, cfg.beta_e),
        PowerNoiseConfig(db_to_linear(cfg.pt_db), db_to_linear(cfg.pj_db), cfg.sigma2_b,
                         cfg.sigma2_e),
        SpatialConstraint(cfg.r_b), SpatialConstraint(cfg.r_e), cfg.n_b,
        EveAntennas::finite(n_e));
}

SystemParams make_worst_case_params(SystemKind kind, const ScenarioConfig& cfg) {
    return SystemParams(
        kind, LinkGains(cfg.alpha_b, cfg.alpha_e, cfg.beta_b, cfg.beta_e),
        PowerNoiseConfig(db_to_linear(cfg.pt_db), db_to_linear(cfg.pj_db), cfg.sigma2_b, 0.0),
        SpatialConstraint(cfg.r_b), SpatialConstraint(cfg.r_e), cfg.n_b,
        EveAntennas::infinite());
}

std::vector<int> IntSweep::values() const {
    if (step < 1) throw std::invalid_argument("sweep: step must be >= 1");
    if (end < begin) throw std::invalid_argument("sweep: end must be >= begin");
    std::vector<int> out;
    for (int v = begin; v <= end; v += step) out.push_back(v);
    return out;
}

std::vector<double> RealSweep::values() const {
    if (!(step > 0.0)) throw std::invalid_argument("sweep: step must be > 0");
    if (end < begin) throw std::invalid_argument("sweep: end must be >= begin");
    const int count = static_cast<int>(std::floor((end - begin) / step + 0.5)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) out.push_back(begin + k * step);
    return out;
}

CsvDocument cmd_capacity(SystemKind kind, const ScenarioConfig& cfg, const IntSweep& nb,
                         const IntSweep& ne) {
    if (!(cfg.sigma2_e > 0.0))
        throw std::invalid_argument(
            "capacity: sigma2_e == 0 describes the worst-case eavesdropper; use the "
            "worstcase subcommand");
    CsvDocument doc;
    doc.add_meta("command", "capacity");
    doc.add_meta("kind", kind_name(kind));
    echo_link_config(doc, cfg, false);
    doc.add_meta("n_b_sweep", sweep_text(nb));
    doc.add_meta("n_e_sweep", sweep_text(ne));
    doc.set_columns({"n_b", "n_e", "c_b", "c_e", "c_s"});
    for (int n_b : nb.values()) {
        ScenarioConfig point = cfg;
        point.n_b = n_b;
        for (int n_e : ne.values()) {
            const CapacityResult res = secrecy_capacity(make_params(kind, point, n_e));
            doc.add_row({format_number(n_b), format_number(n_e), format_number(res.c_b),
                         format_number(res.c_e), format_number(res.c_s)});
        }
    }
    return doc;
}

CsvDocument cmd_capacity_compare(const ScenarioConfig& cfg, const IntSweep& ne) {
    if (!(cfg.sigma2_e > 0.0))
        throw std::invalid_argument(
            "capacity: sigma2_e == 0 describes the worst-case eavesdropper; use the "
            "worstcase subcommand");
    CsvDocument doc;
    doc.add_meta("command", "capacity (system comparison)");
    echo_link_config(doc, cfg, false);
    doc.add_meta("n_b", cfg.n_b);
    doc.add_meta("n_e_sweep", sweep_text(ne));
    doc.set_columns({"system", "n_b", "n_e", "c_b", "c_e", "c_s"});
    for (SystemKind kind :
         {SystemKind::Wiretap, SystemKind::BasicJammer, SystemKind::AnJammer}) {
        for (int n_e : ne.values()) {
            const CapacityResult res = secrecy_capacity(make_params(kind, cfg, n_e));
            doc.add_row({kind_name(kind), format_number(cfg.n_b), format_number(n_e),
                         format_number(res.c_b), format_number(res.c_e),
                         format_number(res.c_s)});
        }
    }
    return doc;
}

namespace {

CsvDocument worstcase_sweep(const ScenarioConfig& cfg, const RealSweep& sweep, bool sweep_is_pj,
                            std::optional<SystemKind> kind) {
    CsvDocument doc;
    doc.add_meta("command", "worstcase");
    if (kind) doc.add_meta("kind", kind_name(*kind));
    echo_link_config(doc, cfg, true);
    doc.add_meta("n_b", cfg.n_b);
    doc.add_meta(sweep_is_pj ? "pj_db_sweep" : "r_e_sweep", sweep_text(sweep));

    std::vector<SystemKind> kinds;
    if (kind) {
        kinds.push_back(*kind);
        if (*kind == SystemKind::Wiretap)
            doc.add_meta("note",
                         "the wiretap worst-case secrecy capacity is identically zero: an "
                         "unjammed Eve with unlimited antennas leaves nothing to protect");
    } else {
        kinds = {SystemKind::BasicJammer, SystemKind::AnJammer};
    }

    std::vector<std::string> columns{sweep_is_pj ? "pj_db" : "r_e"};
    for (SystemKind k : kinds) columns.push_back(std::string("cs_wor_") + kind_name(k));
    doc.set_columns(columns);

    for (double value : sweep.values()) {
        ScenarioConfig point = cfg;
        if (sweep_is_pj)
            point.pj_db = value;
        else
            point.r_e = value;
        std::vector<std::string> row{format_number(value)};
        for (SystemKind k : kinds)
            row.push_back(format_number(worst_case_secrecy(make_worst_case_params(k, point))));
        doc.add_row(row);
    }
    return doc;
}

}  // namespace

CsvDocument cmd_worstcase_sweep_re(const ScenarioConfig& cfg, const RealSweep& re,
                                   std::optional<SystemKind> kind) {
    return worstcase_sweep(cfg, re, false, kind);
}

CsvDocument cmd_worstcase_sweep_pj(const ScenarioConfig& cfg, const RealSweep& pj_db,
                                   std::optional<SystemKind> kind) {
    return worstcase_sweep(cfg, pj_db, true, kind);
}

CsvDocument cmd_nbmin(const ScenarioConfig& cfg, const RealSweep& re) {
    CsvDocument doc;
    doc.add_meta("command", "nbmin");
    echo_link_config(doc, cfg, true);
    doc.add_meta("r_e_sweep", sweep_text(re));
    doc.set_columns({"r_e", "nbmin_basic", "nbmin_an"});
    for (double r_e : re.values()) {
        ScenarioConfig point = cfg;
        point.r_e = r_e;
        std::vector<std::string> row{format_number(r_e)};
        for (SystemKind kind : {SystemKind::BasicJammer, SystemKind::AnJammer}) {
            const FeasibilityReport report = min_bob_antennas(make_worst_case_params(kind, point));
            row.push_back(report.feasible ? format_number(*report.n_b_min)
                                          : std::string("INFEASIBLE"));
        }
        doc.add_row(row);
    }
    return doc;
}

std::string cmd_optpower(const ScenarioConfig& cfg, std::optional<double> pj_max_db) {
    const SystemParams params = make_worst_case_params(SystemKind::BasicJammer, cfg);
    const JammingOptimum optimum = optimal_jamming_power(params);
    const int nsat_b = saturation_number(params.bob_constraint);
    const int nsat_e = saturation_number(params.eve_constraint);
    const bool unsaturated = cfg.n_b <= nsat_b;

    std::ostringstream out;
    out << "optimal jamming power, basic jammer vs worst-case eavesdropper\n";
    out << "  version = " << kVersion << "\n";
    out << "  config: pt_db=" << format_number(cfg.pt_db) << " alpha_b="
        << format_number(cfg.alpha_b) << " alpha_e=" << format_number(cfg.alpha_e)
        << " beta_b=" << format_number(cfg.beta_b) << " beta_e=" << format_number(cfg.beta_e)
        << " sigma2_b=" << format_number(cfg.sigma2_b) << " r_b=" << format_number(cfg.r_b)
        << " r_e=" << format_number(cfg.r_e) << " n_b=" << format_number(cfg.n_b) << "\n";
    out << "  saturation: nsat_b=" << nsat_b << " nsat_e=" << nsat_e
        << ", active branch: " << (unsaturated ? "f1 (n_b <= nsat_b)" : "f2 (n_b > nsat_b)")
        << "\n";

    const char* names[2] = {unsaturated ? "x1" : "x3", unsaturated ? "x2" : "x4"};
    out << "  candidates:\n";
    if (optimum.candidates.empty()) out << "    (skipped: " << optimum.note << ")\n";
    for (std::size_t i = 0; i < optimum.candidates.size(); ++i) {
        const JammingCandidate& cand = optimum.candidates[i];
        out << "    " << names[i % 2] << " = ";
        if (!cand.is_real) {
            out << "complex (re " << format_number(cand.root) << "), not admissible\n";
            continue;
        }
        out << format_number(cand.root);
        if (cand.root > 0.0) {
            out << " (" << format_number(linear_to_db(cand.root)) << " dB), objective "
                << format_number(cand.objective) << ", "
                << (cand.admissible ? "admissible" : "not admissible (objective <= 0)") << "\n";
        } else {
            out << ", not admissible (nonpositive)\n";
        }
    }

    if (optimum.applicable()) {
        const double pj = *optimum.selected_pj;
        out << "  selected: pj_opt = " << format_number(pj) << " ("
            << format_number(linear_to_db(pj)) << " dB), worst-case cs = "
            << format_number(optimum.achieved_cs) << "\n";
        if (optimum.grid_fallback) out << "  note: " << optimum.note << "\n";
        const GridSearchResult grid =
            grid_search_jamming(params, kDefaultGridPjMin, kDefaultGridPjMax, kDefaultGridPoints);
        out << "  grid check: argmax = " << format_number(grid.pj_star) << " ("
            << format_number(linear_to_db(grid.pj_star)) << " dB), cs = "
            << format_number(grid.cs_star) << ", delta = "
            << format_number(std::abs(linear_to_db(grid.pj_star) - linear_to_db(pj)))
            << " dB\n";
        if (pj_max_db) {
            const double clipped = clip_jamming_power(pj, db_to_linear(*pj_max_db));
            out << "  power constraint: pj_max = " << format_number(*pj_max_db)
                << " dB -> operate at " << format_number(linear_to_db(clipped)) << " dB\n";
        }
    } else {
        out << "  selected: n/a (worst-case secrecy capacity is zero for every jamming "
               "power)\n";
        if (!optimum.note.empty()) out << "  note: " << optimum.note << "\n";
    }
    return out.str();
}

const std::vector<int>& validation_receive_counts() {
    static const std::vector<int> counts{1, 5, 10, 20, 40, 60, 80, 100};
    return counts;
}

ValidationConfig make_validation_config(int figure, ArrayLayout layout, int realizations,
                                        std::uint64_t seed) {
    if (figure != 9 && figure != 10)
        throw std::invalid_argument("validate: only the accuracy sweeps 9 and 10 exist");
    ValidationConfig config;
    config.kind = figure == 9 ? ValidationKind::Unjammed : ValidationKind::BasicJammed;
    config.layout = layout;
    config.radius_wavelengths = 1.0;
    config.n_receive = validation_receive_counts();
    config.n_t = 100;
    config.n_j = 100;
    config.realizations = realizations;
    config.seed = seed;
    config.alpha = 1.0;
    config.beta = 1.0;
    config.p_t = db_to_linear(10.0);
    config.p_j = db_to_linear(0.0);
    config.sigma2 = 1.0;
    return config;
}

ValidateOutcome cmd_validate(const ValidateOptions& options) {
    CsvDocument doc;
    doc.add_meta("command", "validate");
    doc.add_meta("version", kVersion);
    doc.add_meta("figure", options.figure);
    doc.add_meta("geometry", geometry_name(options.geometry));
    doc.add_meta("realizations", options.realizations);
    doc.add_meta("seed", format_number(static_cast<double>(options.seed)));
    doc.add_meta("threshold", options.threshold);
    doc.add_meta("n_t", 100);
    if (options.figure == 10) doc.add_meta("n_j", 100);
    doc.add_meta("pt_db", 10.0);
    if (options.figure == 10) doc.add_meta("pj_db", 0.0);
    doc.add_meta("radius", 1.0);
    doc.set_columns({"geometry", "n_i", "mc_mean", "mc_stderr", "approx_corr",
                     "approx_piecewise", "rel_gap"});

    std::vector<ArrayLayout> layouts;
    if (options.geometry == GeometryChoice::Uca || options.geometry == GeometryChoice::Both)
        layouts.push_back(ArrayLayout::UniformCircular);
    if (options.geometry == GeometryChoice::Ula || options.geometry == GeometryChoice::Both)
        layouts.push_back(ArrayLayout::UniformLinear);

    bool exceeded = false;
    double max_gap = 0.0;
    for (ArrayLayout layout : layouts) {
        const ValidationCurve curve = run_validation(
            make_validation_config(options.figure, layout, options.realizations, options.seed));
        const char* name = layout == ArrayLayout::UniformCircular ? "uca" : "ula";
        for (const ValidationPoint& point : curve.points) {
            const double denom = std::max(std::abs(point.approx_correlation), 1e-300);
            const double rel_gap =
                std::abs(point.true_capacity_mean - point.approx_correlation) / denom;
            max_gap = std::max(max_gap, rel_gap);
            if (rel_gap > options.threshold) exceeded = true;
            doc.add_row({name, format_number(point.n_receive),
                         format_number(point.true_capacity_mean),
                         format_number(point.true_capacity_stderr),
                         format_number(point.approx_correlation),
                         format_number(point.approx_piecewise), format_number(rel_gap)});
        }
    }
    return {std::move(doc), exceeded, max_gap};
}

CsvDocument run_figure(int number, const FigureOptions& options) {
    ScenarioConfig cfg;  // defaults carry the headline scenario
    switch (number) {
        case 3:
            return with_preset_meta("figure-3",
                                    cmd_capacity(SystemKind::Wiretap, cfg, {1, 50, 1}, {1, 50, 1}));
        case 4:
            return with_preset_meta(
                "figure-4", cmd_capacity(SystemKind::BasicJammer, cfg, {1, 50, 1}, {1, 50, 1}));
        case 5:
            cfg.r_b = 2.0;
            return with_preset_meta("figure-5", cmd_nbmin(cfg, {0.1, 3.0, 0.1}));
        case 6:
            cfg.n_b = 35;
            return with_preset_meta("figure-6", cmd_capacity_compare(cfg, {1, 60, 1}));
        case 7:
            cfg.r_b = 2.0;
            cfg.n_b = 37;
            return with_preset_meta("figure-7", cmd_worstcase_sweep_re(cfg, {0.1, 3.0, 0.1}));
        case 8:
            cfg.r_b = 1.5;
            cfg.r_e = 1.0;
            cfg.n_b = 30;
            return with_preset_meta("figure-8",
                                    cmd_worstcase_sweep_pj(cfg, {-10.0, 15.0, 0.25}));
        case 9:
        case 10: {
            ValidateOptions opts;
            opts.figure = number;
            opts.geometry = options.geometry.value_or(GeometryChoice::Both);
            opts.realizations = options.realizations;
            opts.seed = options.seed;
            return with_preset_meta("figure-" + std::to_string(number),
                                    cmd_validate(opts).csv);
        }
        default:
            throw std::invalid_argument("figure: preset number must be in 3..10");
    }
}

}  // namespace secap
