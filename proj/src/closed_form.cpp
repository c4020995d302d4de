#include "secap/closed_form.hpp"

#include <cmath>

namespace secap {

namespace {

void require_piecewise_domain(int n, int n_sat) {
    if (n < 1) throw std::invalid_argument("piecewise capacity: n must be >= 1");
    if (n_sat < 3) throw std::invalid_argument("piecewise capacity: n_sat must be >= 3");
}

}  // namespace

double capacity_jammed(int n, int n_sat, double signal, double interference, double noise) {
    require_piecewise_domain(n, n_sat);
    if (signal < 0.0 || interference < 0.0 || noise < 0.0)
        throw std::invalid_argument("piecewise capacity: powers must be >= 0");
    if (!(interference + noise > 0.0))
        throw std::domain_error("capacity_jammed: interference + noise must be > 0");
    if (n <= n_sat) return n * std::log2(1.0 + signal / (interference + noise));
    const double ratio = static_cast<double>(n) / n_sat;
    return n_sat * std::log2(1.0 + (ratio * signal) / (ratio * interference + noise));
}

double capacity_unjammed(int n, int n_sat, double signal, double noise) {
    require_piecewise_domain(n, n_sat);
    if (!(noise > 0.0))
        throw std::domain_error("capacity_unjammed: noise must be > 0 (use the limit forms)");
    return capacity_jammed(n, n_sat, signal, 0.0, noise);
}

double piecewise_capacity(const PiecewiseCapacityInputs& in) {
    return capacity_jammed(in.n, in.n_sat, in.signal, in.interference, in.noise);
}

CapacityResult secrecy_capacity(const SystemParams& params) {
    if (params.n_e.is_infinite() || params.power.sigma2_e == 0.0)
        throw std::domain_error(
            "secrecy_capacity: infinite N_e or zero Eve noise describe the limiting "
            "eavesdropper; use the worst-case operations (worst_case_secrecy)");

    const int nsat_b = saturation_number(params.bob_constraint);
    const int nsat_e = saturation_number(params.eve_constraint);
    const int n_e = params.n_e.count();
    const double signal_b = params.gains.alpha_b * params.power.p_t;
    const double signal_e = params.gains.alpha_e * params.power.p_t;
    const double jam_b = params.gains.beta_b * params.power.p_j;
    const double jam_e = params.gains.beta_e * params.power.p_j;

    double c_b = 0.0;
    double c_e = 0.0;
    switch (params.kind) {
        case SystemKind::Wiretap:
            c_b = capacity_unjammed(params.n_b, nsat_b, signal_b, params.power.sigma2_b);
            c_e = capacity_unjammed(n_e, nsat_e, signal_e, params.power.sigma2_e);
            break;
        case SystemKind::BasicJammer:
            c_b = capacity_jammed(params.n_b, nsat_b, signal_b, jam_b, params.power.sigma2_b);
            c_e = capacity_jammed(n_e, nsat_e, signal_e, jam_e, params.power.sigma2_e);
            break;
        case SystemKind::AnJammer:
            c_b = capacity_unjammed(params.n_b, nsat_b, signal_b, params.power.sigma2_b);
            c_e = capacity_jammed(n_e, nsat_e, signal_e, jam_e, params.power.sigma2_e);
            break;
    }
    return CapacityResult::from_links(c_b, c_e);
}

double capacity_limit_infinite_bob(const SystemParams& params) {
    if (params.kind != SystemKind::BasicJammer)
        throw std::invalid_argument(
            "capacity_limit_infinite_bob: only the jammed Bob link saturates; "
            "requires the basic jammer system");
    if (!(params.power.p_j > 0.0))
        throw std::domain_error("capacity_limit_infinite_bob: limit diverges for p_j == 0");
    const int nsat_b = saturation_number(params.bob_constraint);
    return nsat_b * std::log2(1.0 + params.gains.alpha_b * params.power.p_t /
                                        (params.gains.beta_b * params.power.p_j));
}

double capacity_limit_infinite_eve(const SystemParams& params) {
    if (params.kind == SystemKind::Wiretap)
        throw std::invalid_argument(
            "capacity_limit_infinite_eve: Eve is unjammed in the wiretap system and "
            "her capacity grows without bound");
    if (!(params.power.p_j > 0.0))
        throw std::domain_error("capacity_limit_infinite_eve: limit diverges for p_j == 0");
    const int nsat_e = saturation_number(params.eve_constraint);
    return nsat_e * std::log2(1.0 + params.gains.alpha_e * params.power.p_t /
                                        (params.gains.beta_e * params.power.p_j));
}

}  // namespace secap
