#include "secap/worst_case.hpp"

#include <cmath>
#include <limits>

#include "secap/closed_form.hpp"

namespace secap {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require_worst_case_params(const SystemParams& params, const char* where) {
    if (!params.n_e.is_infinite() || params.power.sigma2_e != 0.0)
        throw std::invalid_argument(
            std::string(where) +
            ": the worst-case analysis assumes infinite N_e and zero Eve noise; finite "
            "Eve parameters are ignored here, build params with the infinite sentinel "
            "and sigma2_e == 0 (finite-Eve capacities live in secrecy_capacity)");
}

/// Eve's limiting capacity Nsat_e * log2(1 + alpha_e*P_t/(beta_e*pj)), pj > 0.
double eve_limit_term(const SystemParams& params, double pj) {
    const int nsat_e = saturation_number(params.eve_constraint);
    return nsat_e *
           std::log2(1.0 + params.gains.alpha_e * params.power.p_t / (params.gains.beta_e * pj));
}

/// Unclamped worst-case objective C_b(pj) - Eve term at jamming power pj.
/// This is f1 while n_b <= Nsat_b and f2 beyond, for the basic jammer; the
/// AN jammer's Bob link does not depend on pj.
double objective_at(const SystemParams& params, double pj) {
    const int nsat_b = saturation_number(params.bob_constraint);
    const double signal_b = params.gains.alpha_b * params.power.p_t;
    double c_b = 0.0;
    switch (params.kind) {
        case SystemKind::Wiretap:
            return 0.0;
        case SystemKind::BasicJammer:
            c_b = capacity_jammed(params.n_b, nsat_b, signal_b, params.gains.beta_b * pj,
                                  params.power.sigma2_b);
            break;
        case SystemKind::AnJammer:
            c_b = capacity_unjammed(params.n_b, nsat_b, signal_b, params.power.sigma2_b);
            break;
    }
    return c_b - eve_limit_term(params, pj);
}

double clamp_positive(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

double worst_case_secrecy(const SystemParams& params) {
    require_worst_case_params(params, "worst_case_secrecy");
    if (params.kind == SystemKind::Wiretap) return 0.0;
    if (!(params.power.p_j > 0.0))
        throw std::domain_error(
            "worst_case_secrecy: p_j must be > 0; without jamming the limiting Eve "
            "capacity diverges and the worst-case secrecy capacity is trivially zero");
    return clamp_positive(objective_at(params, params.power.p_j));
}

bool zero_capacity_condition(const SystemParams& params) {
    require_worst_case_params(params, "zero_capacity_condition");
    if (params.kind != SystemKind::BasicJammer)
        throw std::invalid_argument("zero_capacity_condition: basic jammer system only");
    if (!(params.power.p_j > 0.0))
        throw std::domain_error("zero_capacity_condition: requires p_j > 0");
    const int nsat_b = saturation_number(params.bob_constraint);
    const double bob_limit =
        nsat_b * std::log2(1.0 + params.gains.alpha_b * params.power.p_t /
                                     (params.gains.beta_b * params.power.p_j));
    return bob_limit <= eve_limit_term(params, params.power.p_j);
}

FeasibilityReport min_bob_antennas(const SystemParams& params) {
    require_worst_case_params(params, "min_bob_antennas");
    if (params.kind == SystemKind::Wiretap)
        return {false, std::nullopt, FeasibilityCondition::Infeasible, false};
    if (!(params.power.p_j > 0.0))
        throw std::domain_error("min_bob_antennas: requires p_j > 0");

    // Nothing to protect against: the Eve term vanishes with the transmit
    // power and a single antenna trivially reaches the (zero) target.
    if (params.power.p_t == 0.0)
        return {true, 1, FeasibilityCondition::UnsaturatedBobSufficient, true};

    if (params.kind == SystemKind::BasicJammer && zero_capacity_condition(params))
        return {false, std::nullopt, FeasibilityCondition::Infeasible, false};

    const int nsat_b = saturation_number(params.bob_constraint);
    const int nsat_e = saturation_number(params.eve_constraint);
    const double eve_term = eve_limit_term(params, params.power.p_j);
    const double signal_b = params.gains.alpha_b * params.power.p_t;
    const double bob_denom = params.kind == SystemKind::BasicJammer
                                 ? params.gains.beta_b * params.power.p_j + params.power.sigma2_b
                                 : params.power.sigma2_b;
    if (bob_denom == 0.0)  // noise-free unjammed Bob: per-antenna capacity unbounded
        return {true, 1, FeasibilityCondition::UnsaturatedBobSufficient, false};

    const auto to_count = [](double n_real) {
        if (!(n_real >= 0.0) || n_real >= 9.0e18)
            throw std::overflow_error(
                "min_bob_antennas: result does not fit a 64-bit antenna count");
        return static_cast<long long>(std::floor(n_real)) + 1;
    };

    const double per_antenna = std::log2(1.0 + signal_b / bob_denom);
    if (nsat_b * per_antenna >= eve_term)
        return {true, to_count(eve_term / per_antenna),
                FeasibilityCondition::UnsaturatedBobSufficient, false};

    const double growth = std::pow(1.0 + params.gains.alpha_e * params.power.p_t /
                                             (params.gains.beta_e * params.power.p_j),
                                   static_cast<double>(nsat_e) / nsat_b);
    double n_real = 0.0;
    if (params.kind == SystemKind::BasicJammer) {
        const double jam_b = params.gains.beta_b * params.power.p_j;
        n_real = nsat_b * params.power.sigma2_b * (growth - 1.0) /
                 (signal_b + jam_b - jam_b * growth);
    } else {
        n_real = nsat_b * params.power.sigma2_b / signal_b * (growth - 1.0);
    }
    return {true, to_count(n_real), FeasibilityCondition::SaturatedBobSufficient, false};
}

GridSearchResult grid_search_jamming(const SystemParams& params, double pj_min, double pj_max,
                                     int points) {
    require_worst_case_params(params, "grid_search_jamming");
    if (!(pj_min > 0.0) || !(pj_max > pj_min))
        throw std::invalid_argument("grid_search_jamming: need 0 < pj_min < pj_max");
    if (points < 2) throw std::invalid_argument("grid_search_jamming: need points >= 2");

    const double log_min = std::log(pj_min);
    const double log_step = (std::log(pj_max) - log_min) / (points - 1);
    double best_pj = pj_min;
    double best_cs = -1.0;
    for (int k = 0; k < points; ++k) {
        const double pj = std::exp(log_min + k * log_step);
        const double cs = clamp_positive(objective_at(params, pj));
        if (cs > best_cs) {
            best_cs = cs;
            best_pj = pj;
        }
    }
    return {best_pj, best_cs, best_cs == 0.0};
}

JammingOptimum optimal_jamming_power(const SystemParams& params) {
    require_worst_case_params(params, "optimal_jamming_power");
    if (params.kind != SystemKind::BasicJammer)
        throw std::invalid_argument(
            "optimal_jamming_power: basic jammer system only (the AN worst case is "
            "monotone in p_j and the wiretap worst case is identically zero)");

    const int nsat_b = saturation_number(params.bob_constraint);
    const int nsat_e = saturation_number(params.eve_constraint);
    const double a_b = params.gains.alpha_b;
    const double a_e = params.gains.alpha_e;
    const double b_b = params.gains.beta_b;
    const double b_e = params.gains.beta_e;
    const double p_t = params.power.p_t;
    const double s_b = params.power.sigma2_b;
    const double n_b = params.n_b;

    const bool unsaturated = params.n_b <= nsat_b;
    const ObjectiveBranch branch =
        unsaturated ? ObjectiveBranch::F1Unsaturated : ObjectiveBranch::F2Saturated;

    // Denominator of both stationary-point candidates of the active branch;
    // when it vanishes the quadratic degenerates and the closed form divides
    // by (nearly) zero.
    const double denom_pos = unsaturated ? n_b * a_b * b_e : nsat_b * a_b * b_e;
    const double denom_neg = nsat_e * a_e * b_b;
    const double denom = denom_pos - denom_neg;

    JammingOptimum result;
    if (std::abs(denom) <= 1e-12 * (denom_pos + denom_neg)) {
        const GridSearchResult grid =
            grid_search_jamming(params, kDefaultGridPjMin, kDefaultGridPjMax, kDefaultGridPoints);
        result.grid_fallback = true;
        result.note =
            "candidate denominator is numerically singular; optimum taken from the "
            "grid search";
        if (!grid.degenerate) {
            result.selected_pj = grid.pj_star;
            result.achieved_cs = grid.cs_star;
        }
        return result;
    }

    double base = 0.0;
    double discriminant = 0.0;
    double spread_scale = 0.0;  // sqrt(discriminant) / spread_scale is the root offset
    if (unsaturated) {
        const double phi1 =
            4.0 * n_b * nsat_e * a_b * a_e * b_b * s_b * (p_t * a_b * b_e - p_t * a_e * b_b + b_e * s_b);
        const double linear = a_b * a_e * b_b * p_t * (n_b - nsat_e);
        discriminant = linear * linear + phi1;
        base = (2.0 * nsat_e * a_e * s_b - p_t * a_b * a_e * (n_b - nsat_e)) / (2.0 * denom);
        spread_scale = 2.0 * b_b * denom;
    } else {
        const double phi2 = 4.0 * nsat_b * nsat_b * nsat_e * a_b * a_e * b_b * s_b *
                            (n_b * p_t * a_b * b_e - n_b * p_t * a_e * b_b + nsat_b * b_e * s_b);
        const double linear = a_b * a_e * b_b * p_t * n_b * (nsat_b - nsat_e);
        discriminant = linear * linear + phi2;
        base = (2.0 * nsat_e * nsat_b * a_e * s_b - n_b * p_t * a_b * a_e * (nsat_b - nsat_e)) /
               (2.0 * n_b * denom);
        spread_scale = 2.0 * n_b * b_b * denom;
    }

    const bool real_roots = discriminant >= 0.0;
    const double offset = real_roots ? std::sqrt(discriminant) / spread_scale : kNan;
    for (const double root : {base + offset, base - offset}) {
        JammingCandidate cand{real_roots ? root : base, real_roots, kNan, branch, false};
        if (real_roots && root > 0.0) {
            cand.objective = objective_at(params, root);
            cand.admissible = cand.objective > 0.0;
        }
        result.candidates.push_back(cand);
    }

    for (const JammingCandidate& cand : result.candidates) {
        if (!cand.admissible) continue;
        if (!result.selected_pj || cand.objective > result.achieved_cs ||
            (cand.objective == result.achieved_cs && cand.root < *result.selected_pj)) {
            result.selected_pj = cand.root;
            result.achieved_cs = cand.objective;
        }
    }
    return result;
}

}  // namespace secap
