#ifndef SECAP_MONTECARLO_HPP
#define SECAP_MONTECARLO_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "secap/model.hpp"

// Monte-Carlo channel simulation against the closed forms: antenna-array
// geometries in a fixed aperture, the spatial correlation matrix they
// induce, sampled channel realizations and instantaneous log-det capacities,
// with and without jamming.

namespace secap {

enum class ArrayLayout { UniformLinear, UniformCircular };

/// Antenna positions in wavelength units inside a circular aperture.
/// UniformCircular: equally spaced on the circle of the stated radius.
/// UniformLinear: equally spaced on a diameter segment of length 2r
/// (a single element sits at the center).
struct ArrayGeometry {
    ArrayLayout layout;
    int count;
    double radius_wavelengths;
    std::vector<Eigen::Vector2d> positions;
};

ArrayGeometry build_geometry(ArrayLayout layout, int count, double radius_wavelengths);

/// Receiver spatial correlation under 2D isotropic scattering:
/// rho_kk' = J_0(2*pi*d_kk') with d in wavelengths. Unit diagonal, PSD up to
/// the numerics clamp.
Eigen::MatrixXcd correlation_matrix(const ArrayGeometry& geometry);

/// One Monte-Carlo batch: transmit/jammer antenna counts, realization count,
/// master seed, and the receiver's correlation (with its generating geometry).
struct ChannelEnsemble {
    int n_t;
    int n_j;
    int realizations;
    std::uint64_t seed;
    Eigen::MatrixXcd receiver_correlation;
    ArrayGeometry geometry;
};

/// Sample mean and standard error of a Monte-Carlo capacity estimate.
/// stderr_valid is false for single-realization batches (stderr reported 0).
struct McStats {
    double mean;
    double stderr_mean;
    int realizations;
    bool stderr_valid;
};

/// Mean instantaneous log2 det(I + (alpha*p_t/(sigma2*N_t)) H H^H) over the
/// ensemble, H drawn with the ensemble's receiver correlation.
McStats true_capacity_unjammed(const ChannelEnsemble& ensemble, double alpha, double p_t,
                               double sigma2);

/// Mean instantaneous capacity under random jamming,
/// log2 det(I + (alpha*p_t/N_t) H H^H ((beta*p_j/N_j) G G^H + sigma2 I)^{-1}),
/// H and G drawn with the same receiver correlation. With p_j == 0 this
/// reuses the unjammed evaluation on the same H draws, so the two curves
/// coincide realization-for-realization.
McStats true_capacity_basic_jammed(const ChannelEnsemble& ensemble, double alpha, double p_t,
                                   double beta, double p_j, double sigma2);

/// Eve's mean capacity under null-space jamming: per realization draws Bob's
/// jammer channel G_b (n_b x N_j, column covariance bob_correlation), forms
/// the null-space basis Z and the equivalent jam channel K = G_e Z, then
/// evaluates log2 det(I + (alpha*p_t/N_t) H H^H
/// ((beta*p_j/(N_j - n_b)) K K^H + sigma2 I)^{-1}). Requires N_j > n_b.
McStats true_capacity_an_jammed(const ChannelEnsemble& eve_ensemble, int n_b,
                                const Eigen::MatrixXcd& bob_correlation, double alpha,
                                double p_t, double beta, double p_j, double sigma2);

enum class ValidationKind { Unjammed, BasicJammed, AnJammed };

/// Scenario for a validation sweep over the receive antenna count.
struct ValidationConfig {
    ValidationKind kind = ValidationKind::Unjammed;
    ArrayLayout layout = ArrayLayout::UniformCircular;
    ApertureDim dimension = ApertureDim::Circular2D;
    double radius_wavelengths = 1.0;
    std::vector<int> n_receive;
    int n_t = 100;
    int n_j = 100;
    int n_b = 10;  // AnJammed only: Bob antenna count behind the null space
    int realizations = 200;
    std::uint64_t seed = 1;
    double alpha = 1.0;
    double beta = 1.0;
    double p_t = 10.0;
    double p_j = 1.0;
    double sigma2 = 1.0;
};

struct ValidationPoint {
    int n_receive;
    double true_capacity_mean;
    double true_capacity_stderr;
    bool stderr_valid;
    double approx_correlation;  // log-det of the correlation-matrix form
    double approx_piecewise;    // saturation-number piecewise form
};

struct ValidationCurve {
    std::string scenario;
    std::vector<ValidationPoint> points;  // sorted by n_receive
};

/// Correlation-based capacity approximations for one receive count; these
/// are the closed-form targets the Monte-Carlo means are validated against.
double approx_capacity_correlation(const Eigen::MatrixXcd& r, double alpha, double p_t,
                                   double beta, double p_j, double sigma2);

/// Runs the full sweep: one point per n_receive pairing the Monte-Carlo mean
/// with both approximations. Deterministic for a fixed config and seed.
ValidationCurve run_validation(const ValidationConfig& config);

}  // namespace secap

#endif
