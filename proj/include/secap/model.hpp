#ifndef SECAP_MODEL_HPP
#define SECAP_MODEL_HPP

#include <stdexcept>

// Scenario description for spatially-constrained secrecy analysis.
//
// All types here are immutable value objects; they carry no hidden state and
// are safe to copy and share across threads. Powers, gains and noise
// variances are stored in linear scale throughout the library; decibels
// appear only at the CLI boundary.

namespace secap {

enum class ApertureDim { Circular2D, Spherical3D };

/// Aperture that confines a receiver's antennas, radius in carrier
/// wavelengths (the model only ever depends on the ratio r/lambda).
struct SpatialConstraint {
    double radius_wavelengths;
    ApertureDim dimension;

    explicit SpatialConstraint(double radius_wavelengths,
                               ApertureDim dimension = ApertureDim::Circular2D)
        : radius_wavelengths(radius_wavelengths), dimension(dimension) {
        if (!(radius_wavelengths > 0.0))
            throw std::invalid_argument("SpatialConstraint: radius must be > 0 wavelengths");
    }
};

/// Antenna count beyond which capacity growth in a fixed aperture drops from
/// linear to logarithmic: 2*ceil(pi*e*r) + 1 for a circular aperture,
/// (ceil(pi*e*r) + 1)^2 for a spherical one. Always >= 3; odd in 2D.
int saturation_number(const SpatialConstraint& constraint);

/// Average channel gains: alpha_* from the transmitter, beta_* from the
/// jammer, to Bob (b) and Eve (e).
struct LinkGains {
    double alpha_b;
    double alpha_e;
    double beta_b;
    double beta_e;

    LinkGains(double alpha_b, double alpha_e, double beta_b, double beta_e)
        : alpha_b(alpha_b), alpha_e(alpha_e), beta_b(beta_b), beta_e(beta_e) {
        if (!(alpha_b > 0.0 && alpha_e > 0.0 && beta_b > 0.0 && beta_e > 0.0))
            throw std::invalid_argument("LinkGains: all gains must be > 0");
    }
};

/// Transmit power, jamming power and per-receiver noise variances, linear scale.
struct PowerNoiseConfig {
    double p_t;
    double p_j;
    double sigma2_b;
    double sigma2_e;

    PowerNoiseConfig(double p_t, double p_j, double sigma2_b, double sigma2_e)
        : p_t(p_t), p_j(p_j), sigma2_b(sigma2_b), sigma2_e(sigma2_e) {
        if (p_t < 0.0 || p_j < 0.0 || sigma2_b < 0.0 || sigma2_e < 0.0)
            throw std::invalid_argument("PowerNoiseConfig: powers and variances must be >= 0");
    }
};

enum class SystemKind {
    Wiretap,      // no jammer; p_j is ignored
    BasicJammer,  // random jamming, degrades Bob and Eve
    AnJammer      // null-space jamming, degrades Eve only
};

/// Eve's antenna count: a finite value, or the explicit infinite sentinel
/// used by the worst-case analysis (kept symbolic so the N_e -> infinity
/// limit is taken analytically, never approximated by a huge integer).
class EveAntennas {
public:
    static EveAntennas finite(int n) {
        if (n < 1) throw std::invalid_argument("EveAntennas: count must be >= 1");
        return EveAntennas(n);
    }
    static EveAntennas infinite() { return EveAntennas(-1); }

    bool is_infinite() const { return n_ < 0; }
    int count() const {
        if (is_infinite()) throw std::logic_error("EveAntennas: count() on infinite sentinel");
        return n_;
    }

private:
    explicit EveAntennas(int n) : n_(n) {}
    int n_;
};

/// Full scenario: system kind, link budget, spatial constraints and antenna
/// counts. For kind == Wiretap the jamming power has no effect on any result.
struct SystemParams {
    SystemKind kind;
    LinkGains gains;
    PowerNoiseConfig power;
    SpatialConstraint bob_constraint;
    SpatialConstraint eve_constraint;
    int n_b;
    EveAntennas n_e;

    SystemParams(SystemKind kind, LinkGains gains, PowerNoiseConfig power,
                 SpatialConstraint bob_constraint, SpatialConstraint eve_constraint,
                 int n_b, EveAntennas n_e)
        : kind(kind), gains(gains), power(power),
          bob_constraint(bob_constraint), eve_constraint(eve_constraint),
          n_b(n_b), n_e(n_e) {
        if (n_b < 1) throw std::invalid_argument("SystemParams: n_b must be >= 1");
    }
};

/// Per-link capacities and the clamped secrecy capacity, bits/s/Hz.
struct CapacityResult {
    double c_b;
    double c_e;
    double c_s;

    /// Builds the result enforcing c_s = max(c_b - c_e, 0).
    static CapacityResult from_links(double c_b, double c_e) {
        return CapacityResult{c_b, c_e, c_b > c_e ? c_b - c_e : 0.0};
    }
};

/// 10^(x/10); inverse of linear_to_db.
double db_to_linear(double x_db);

/// 10*log10(x); throws std::domain_error for x <= 0.
double linear_to_db(double x);

}  // namespace secap

#endif
