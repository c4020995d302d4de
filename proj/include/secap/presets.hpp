#ifndef SECAP_PRESETS_HPP
#define SECAP_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "secap/csv.hpp"
#include "secap/model.hpp"
#include "secap/montecarlo.hpp"

// Scenario configuration and the analyses behind each CLI subcommand,
// including the numbered figure-data presets. Kept in the library so the
// command-line tool stays a thin argument parser and the exact CSV output is
// testable in-process.

namespace secap {

/// Scalar scenario knobs as they appear on the command line (powers in dB;
/// converted to linear exactly once, when SystemParams are built).
struct ScenarioConfig {
    double alpha_b = 1.0;
    double alpha_e = 1.0;
    double beta_b = 1.0;
    double beta_e = 1.0;
    double pt_db = 20.0;
    double pj_db = 0.0;
    double sigma2_b = 1.0;
    double sigma2_e = 1.0;
    double r_b = 1.5;
    double r_e = 1.0;
    int n_b = 35;
};

/// Finite-Eve params for the closed-form capacities.
SystemParams make_params(SystemKind kind, const ScenarioConfig& cfg, int n_e);

/// Worst-case params: infinite Eve antennas, zero Eve noise.
SystemParams make_worst_case_params(SystemKind kind, const ScenarioConfig& cfg);

struct IntSweep {
    int begin = 1;
    int end = 1;
    int step = 1;
    std::vector<int> values() const;
};

struct RealSweep {
    double begin = 0.0;
    double end = 0.0;
    double step = 1.0;
    std::vector<double> values() const;
};

/// capacity: rows (n_b, n_e, c_b, c_e, c_s) for one system kind.
CsvDocument cmd_capacity(SystemKind kind, const ScenarioConfig& cfg, const IntSweep& nb,
                         const IntSweep& ne);

/// capacity comparison across all three systems at fixed n_b
/// (the N_b = 35 preset): rows (system, n_b, n_e, c_b, c_e, c_s).
CsvDocument cmd_capacity_compare(const ScenarioConfig& cfg, const IntSweep& ne);

/// worstcase: rows (r_e, cs_wor_*) or (pj_db, cs_wor_*); `kind` empty means
/// both jammer systems, Wiretap emits the identically-zero column with a note.
CsvDocument cmd_worstcase_sweep_re(const ScenarioConfig& cfg, const RealSweep& re,
                                   std::optional<SystemKind> kind = {});
CsvDocument cmd_worstcase_sweep_pj(const ScenarioConfig& cfg, const RealSweep& pj_db,
                                   std::optional<SystemKind> kind = {});

/// nbmin: rows (r_e, nbmin_basic, nbmin_an); infeasible entries are the
/// string INFEASIBLE.
CsvDocument cmd_nbmin(const ScenarioConfig& cfg, const RealSweep& re);

/// optpower: human-readable report with all candidates, the selection in dB
/// and linear, the optional clip against pj_max_db, and the grid cross-check.
std::string cmd_optpower(const ScenarioConfig& cfg, std::optional<double> pj_max_db = {});

enum class GeometryChoice { Uca, Ula, Both };

struct ValidateOptions {
    int figure = 9;  // 9: unjammed accuracy sweep, 10: jammed accuracy sweep
    GeometryChoice geometry = GeometryChoice::Uca;
    int realizations = 200;
    std::uint64_t seed = 1;
    double threshold = 0.10;  // relative gap gate
};

struct ValidateOutcome {
    CsvDocument csv;
    bool threshold_exceeded;
    double max_rel_gap;
};

/// validate: rows (geometry, n_i, mc_mean, mc_stderr, approx_corr,
/// approx_piecewise, rel_gap). threshold_exceeded drives CLI exit code 2.
ValidateOutcome cmd_validate(const ValidateOptions& options);

struct FigureOptions {
    std::uint64_t seed = 1;
    int realizations = 200;
    std::optional<GeometryChoice> geometry;  // figures 9/10; default Both
};

/// Figure-data presets 3..10, each a complete scenario + sweep.
CsvDocument run_figure(int number, const FigureOptions& options = {});

/// Default receive-count sweep of the validation presets.
const std::vector<int>& validation_receive_counts();

ValidationConfig make_validation_config(int figure, ArrayLayout layout, int realizations,
                                        std::uint64_t seed);

}  // namespace secap

#endif
