#ifndef SECAP_CLOSED_FORM_HPP
#define SECAP_CLOSED_FORM_HPP

#include "secap/model.hpp"

// Piecewise closed-form capacities for spatially-constrained receivers.
//
// Below the saturation number the capacity grows linearly with the antenna
// count; beyond it only the effective SNR keeps growing inside a fixed
// number of spatial modes. All capacities are in bits/s/Hz (log base 2).

namespace secap {

/// Inputs of one piecewise capacity evaluation for a single receiver:
/// n antennas against a saturation number n_sat, numerator power `signal`
/// (e.g. alpha_i * P_t), additive jamming term `interference`
/// (e.g. beta_i * P_j, zero when unjammed) and noise variance `noise`.
struct PiecewiseCapacityInputs {
    int n;
    int n_sat;
    double signal;
    double interference;
    double noise;
};

/// n*log2(1 + signal/noise) for n <= n_sat, else
/// n_sat*log2(1 + (n/n_sat)*signal/noise). Requires noise > 0.
double capacity_unjammed(int n, int n_sat, double signal, double noise);

/// n*log2(1 + signal/(interference + noise)) for n <= n_sat, else
/// n_sat*log2(1 + ((n/n_sat)*signal) / ((n/n_sat)*interference + noise)).
/// Requires interference + noise > 0. With interference == 0 this reduces
/// bit-exactly to capacity_unjammed.
double capacity_jammed(int n, int n_sat, double signal, double interference, double noise);

double piecewise_capacity(const PiecewiseCapacityInputs& in);

/// Per-link capacities and secrecy capacity for a finite, noisy Eve.
/// Wiretap: both links unjammed. BasicJammer: both jammed. AnJammer: Bob
/// unjammed, Eve jammed. Throws std::domain_error when n_e is the infinite
/// sentinel or sigma2_e == 0 (those live in the worst-case analysis).
CapacityResult secrecy_capacity(const SystemParams& params);

/// N_b -> infinity limit of Bob's jammed capacity,
/// Nsat_b * log2(1 + alpha_b*P_t/(beta_b*P_j)). BasicJammer only; throws
/// std::domain_error when p_j == 0 (the limit diverges).
double capacity_limit_infinite_bob(const SystemParams& params);

/// N_e -> infinity limit of Eve's jammed capacity,
/// Nsat_e * log2(1 + alpha_e*P_t/(beta_e*P_j)). Jammer kinds only; throws
/// std::domain_error when p_j == 0.
double capacity_limit_infinite_eve(const SystemParams& params);

}  // namespace secap

#endif
