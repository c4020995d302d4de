#ifndef SECAP_WORST_CASE_HPP
#define SECAP_WORST_CASE_HPP

#include <optional>
#include <string>
#include <vector>

#include "secap/model.hpp"

// Worst-case analysis: Eve with unlimited antennas and vanishing receiver
// noise. In this limit Eve's capacity saturates at
// Nsat_e * log2(1 + alpha_e*P_t/(beta_e*P_j)) and every result below is
// independent of N_e and sigma2_e. Operations in this module therefore
// require params with n_e == infinite and sigma2_e == 0; passing finite Eve
// parameters is rejected to avoid silently ignoring them.

namespace secap {

/// Which branch of the worst-case objective a stationary-point candidate
/// belongs to: f1 applies while Bob is unsaturated (n_b <= Nsat_b), f2 once
/// Bob's array has saturated.
enum class ObjectiveBranch { F1Unsaturated, F2Saturated };

struct JammingCandidate {
    double root;        // candidate jamming power, linear; real part if complex
    bool is_real;
    double objective;   // branch objective at the root; NaN unless real and positive
    ObjectiveBranch branch;
    bool admissible;    // real, > 0, objective > 0
};

/// Output of the closed-form optimal-jamming-power solve. `selected_pj` is
/// empty when no candidate is admissible (the worst-case secrecy capacity is
/// identically zero) or when the degenerate-denominator grid fallback also
/// found nothing positive.
struct JammingOptimum {
    std::vector<JammingCandidate> candidates;
    std::optional<double> selected_pj;  // linear
    double achieved_cs = 0.0;
    bool grid_fallback = false;
    std::string note;

    bool applicable() const { return selected_pj.has_value(); }
};

enum class FeasibilityCondition {
    UnsaturatedBobSufficient,  // n_b_min <= Nsat_b suffices
    SaturatedBobSufficient,    // Bob must saturate; n_b_min > Nsat_b
    Infeasible                 // zero capacity for every n_b
};

struct FeasibilityReport {
    bool feasible;
    std::optional<long long> n_b_min;
    FeasibilityCondition binding_condition;
    bool degenerate = false;  // p_t == 0: nothing to protect, capacity identically 0
};

/// Worst-case secrecy capacity. Wiretap: exactly 0. Jammer kinds: Bob's
/// finite-n_b capacity minus Eve's saturated limit, clamped at zero. Throws
/// std::domain_error for a jammer kind with p_j == 0 (Eve's limiting
/// capacity diverges and the result is trivially zero).
double worst_case_secrecy(const SystemParams& params);

/// True iff no number of Bob antennas can yield a positive worst-case
/// secrecy capacity for the basic jammer:
/// Nsat_b*log2(1 + a_b*P_t/(b_b*P_j)) <= Nsat_e*log2(1 + a_e*P_t/(b_e*P_j)).
bool zero_capacity_condition(const SystemParams& params);

/// Minimum n_b with a positive worst-case secrecy capacity, or Infeasible.
/// Throws std::overflow_error for parameter corners whose answer does not fit
/// a 64-bit count.
FeasibilityReport min_bob_antennas(const SystemParams& params);

/// Closed-form optimal jamming power for the basic jammer: evaluates the two
/// stationary-point candidates of the active branch (x1/x2 for f1 when
/// n_b <= Nsat_b, x3/x4 for f2 otherwise) and selects the admissible one with
/// the larger objective; ties go to the smaller power. Near-singular
/// candidate denominators are routed to the grid search with a note.
JammingOptimum optimal_jamming_power(const SystemParams& params);

struct GridSearchResult {
    double pj_star;
    double cs_star;
    bool degenerate;  // objective identically zero over the grid
};

inline constexpr double kDefaultGridPjMin = 1e-3;
inline constexpr double kDefaultGridPjMax = 1e3;
inline constexpr int kDefaultGridPoints = 2000;

/// Deterministic log-spaced scan of worst_case_secrecy over jamming power;
/// the independent check for optimal_jamming_power.
GridSearchResult grid_search_jamming(const SystemParams& params, double pj_min,
                                     double pj_max, int points);

/// Jamming power actually used under a jammer power constraint.
inline double clip_jamming_power(double pj_opt, double pj_max) {
    return pj_opt < pj_max ? pj_opt : pj_max;
}

}  // namespace secap

#endif
