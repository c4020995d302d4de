#include "secap/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "secap/closed_form.hpp"
#include "secap/numerics.hpp"

namespace secap {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

/// log2 det of a Hermitian positive definite matrix via Cholesky.
double log2det_hpd(const Eigen::MatrixXcd& a, const char* where) {
    Eigen::LLT<Eigen::MatrixXcd> llt(a);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error(std::string(where) +
                                 ": interference-plus-noise matrix is numerically singular");
    double sum = 0.0;
    const auto diag = llt.matrixLLT().diagonal();
    for (Eigen::Index k = 0; k < diag.size(); ++k) sum += std::log2(diag[k].real());
    return 2.0 * sum;
}

double realization_capacity_unjammed(const Eigen::MatrixXcd& h, double alpha, double p_t,
                                     double sigma2, int n_t) {
    const Eigen::Index n = h.rows();
    const Eigen::MatrixXcd inner =
        Eigen::MatrixXcd::Identity(n, n) + (alpha * p_t / (sigma2 * n_t)) * (h * h.adjoint());
    return log2det_hpd(inner, "true_capacity_unjammed");
}

double realization_capacity_jammed(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& jam_gram,
                                   double alpha, double p_t, int n_t, double jam_scale,
                                   double sigma2) {
    const Eigen::Index n = h.rows();
    const Eigen::MatrixXcd noise =
        jam_scale * jam_gram + sigma2 * Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd total = noise + (alpha * p_t / n_t) * (h * h.adjoint());
    return log2det_hpd(total, "true_capacity_jammed") - log2det_hpd(noise, "true_capacity_jammed");
}

McStats summarize(const std::vector<double>& samples) {
    const int n = static_cast<int>(samples.size());
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= n;
    if (n < 2) return {mean, 0.0, n, false};
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (static_cast<double>(n - 1) * n)), n, true};
}

void require_ensemble(const ChannelEnsemble& e, const char* where) {
    if (e.n_t < 1) throw std::invalid_argument(std::string(where) + ": n_t must be >= 1");
    if (e.realizations < 1)
        throw std::invalid_argument(std::string(where) + ": realizations must be >= 1");
    if (e.receiver_correlation.rows() != e.receiver_correlation.cols() ||
        e.receiver_correlation.rows() < 1)
        throw std::invalid_argument(std::string(where) + ": bad correlation matrix");
}

}  // namespace

ArrayGeometry build_geometry(ArrayLayout layout, int count, double radius_wavelengths) {
    if (count < 1) throw std::invalid_argument("build_geometry: count must be >= 1");
    if (!(radius_wavelengths > 0.0))
        throw std::invalid_argument("build_geometry: radius must be > 0");
    ArrayGeometry geometry{layout, count, radius_wavelengths, {}};
    geometry.positions.reserve(count);
    switch (layout) {
        case ArrayLayout::UniformCircular:
            for (int k = 0; k < count; ++k) {
                const double angle = kTwoPi * k / count;
                geometry.positions.emplace_back(radius_wavelengths * std::cos(angle),
                                                radius_wavelengths * std::sin(angle));
            }
            break;
        case ArrayLayout::UniformLinear:
            if (count == 1) {
                geometry.positions.emplace_back(0.0, 0.0);
            } else {
                for (int k = 0; k < count; ++k) {
                    const double x =
                        -radius_wavelengths + 2.0 * radius_wavelengths * k / (count - 1);
                    geometry.positions.emplace_back(x, 0.0);
                }
            }
            break;
    }
    return geometry;
}

Eigen::MatrixXcd correlation_matrix(const ArrayGeometry& geometry) {
    const int n = geometry.count;
    if (static_cast<int>(geometry.positions.size()) != n)
        throw std::invalid_argument("correlation_matrix: geometry positions out of sync");
    Eigen::MatrixXcd r(n, n);
    for (int i = 0; i < n; ++i) {
        r(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double d = (geometry.positions[i] - geometry.positions[j]).norm();
            const double rho = bessel_j(0, kTwoPi * d);
            r(i, j) = rho;
            r(j, i) = rho;
        }
    }
    if (n > 1) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r, Eigen::EigenvaluesOnly);
        const double max_ev = solver.eigenvalues().maxCoeff();
        if (solver.eigenvalues().minCoeff() < -kPsdEpsilon * max_ev)
            throw std::runtime_error("correlation_matrix: model produced a non-PSD matrix");
    }
    return r;
}

McStats true_capacity_unjammed(const ChannelEnsemble& ensemble, double alpha, double p_t,
                               double sigma2) {
    require_ensemble(ensemble, "true_capacity_unjammed");
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("true_capacity_unjammed: sigma2 must be > 0");
    const Eigen::MatrixXcd r_sqrt = hermitian_sqrt(ensemble.receiver_correlation);
    std::vector<double> samples(ensemble.realizations);
    for (int rlz = 0; rlz < ensemble.realizations; ++rlz) {
        const Eigen::MatrixXcd h = sample_correlated_from_sqrt(
            r_sqrt, ensemble.n_t, ensemble.seed, rlz, rng_role::kTransmitChannel);
        samples[rlz] = realization_capacity_unjammed(h, alpha, p_t, sigma2, ensemble.n_t);
    }
    return summarize(samples);
}

McStats true_capacity_basic_jammed(const ChannelEnsemble& ensemble, double alpha, double p_t,
                                   double beta, double p_j, double sigma2) {
    require_ensemble(ensemble, "true_capacity_basic_jammed");
    if (!(sigma2 > 0.0 || p_j > 0.0))
        throw std::invalid_argument("true_capacity_basic_jammed: sigma2 or p_j must be > 0");
    const Eigen::MatrixXcd r_sqrt = hermitian_sqrt(ensemble.receiver_correlation);
    std::vector<double> samples(ensemble.realizations);
    for (int rlz = 0; rlz < ensemble.realizations; ++rlz) {
        const Eigen::MatrixXcd h = sample_correlated_from_sqrt(
            r_sqrt, ensemble.n_t, ensemble.seed, rlz, rng_role::kTransmitChannel);
        if (p_j == 0.0) {
            // Jamming off: same draw stream and same arithmetic as the
            // unjammed estimator, so both curves coincide exactly.
            samples[rlz] = realization_capacity_unjammed(h, alpha, p_t, sigma2, ensemble.n_t);
            continue;
        }
        if (ensemble.n_j < 1)
            throw std::invalid_argument("true_capacity_basic_jammed: n_j must be >= 1");
        const Eigen::MatrixXcd g = sample_correlated_from_sqrt(
            r_sqrt, ensemble.n_j, ensemble.seed, rlz, rng_role::kJamChannel);
        samples[rlz] = realization_capacity_jammed(h, g * g.adjoint(), alpha, p_t, ensemble.n_t,
                                                   beta * p_j / ensemble.n_j, sigma2);
    }
    return summarize(samples);
}

McStats true_capacity_an_jammed(const ChannelEnsemble& eve_ensemble, int n_b,
                                const Eigen::MatrixXcd& bob_correlation, double alpha,
                                double p_t, double beta, double p_j, double sigma2) {
    require_ensemble(eve_ensemble, "true_capacity_an_jammed");
    if (n_b < 1) throw std::invalid_argument("true_capacity_an_jammed: n_b must be >= 1");
    if (eve_ensemble.n_j <= n_b)
        throw std::invalid_argument(
            "true_capacity_an_jammed: n_j must exceed n_b, the null space is empty");
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("true_capacity_an_jammed: sigma2 must be > 0");
    const Eigen::MatrixXcd r_sqrt_eve = hermitian_sqrt(eve_ensemble.receiver_correlation);
    const Eigen::MatrixXcd r_sqrt_bob = hermitian_sqrt(bob_correlation);
    const int null_dim = eve_ensemble.n_j - n_b;
    std::vector<double> samples(eve_ensemble.realizations);
    for (int rlz = 0; rlz < eve_ensemble.realizations; ++rlz) {
        const Eigen::MatrixXcd g_b = sample_correlated_from_sqrt(
            r_sqrt_bob, eve_ensemble.n_j, eve_ensemble.seed, rlz, rng_role::kJamToBobChannel);
        const Eigen::MatrixXcd z = null_space_basis(g_b);
        const Eigen::MatrixXcd g_e = sample_correlated_from_sqrt(
            r_sqrt_eve, eve_ensemble.n_j, eve_ensemble.seed, rlz, rng_role::kJamChannel);
        const Eigen::MatrixXcd k = g_e * z;
        const Eigen::MatrixXcd h = sample_correlated_from_sqrt(
            r_sqrt_eve, eve_ensemble.n_t, eve_ensemble.seed, rlz, rng_role::kTransmitChannel);
        samples[rlz] = realization_capacity_jammed(h, k * k.adjoint(), alpha, p_t,
                                                   eve_ensemble.n_t, beta * p_j / null_dim,
                                                   sigma2);
    }
    return summarize(samples);
}

double approx_capacity_correlation(const Eigen::MatrixXcd& r, double alpha, double p_t,
                                   double beta, double p_j, double sigma2) {
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("approx_capacity_correlation: sigma2 must be > 0");
    if (beta * p_j == 0.0) return logdet_capacity((alpha * p_t / sigma2) * r);
    // Two-term split of log2|I + aR(bR + sI)^{-1}|.
    return logdet_capacity(((alpha * p_t + beta * p_j) / sigma2) * r) -
           logdet_capacity((beta * p_j / sigma2) * r);
}

namespace {
const char* to_string(ValidationKind kind) {
    switch (kind) {
        case ValidationKind::Unjammed: return "unjammed";
        case ValidationKind::BasicJammed: return "basic-jammed";
        case ValidationKind::AnJammed: return "an-jammed";
    }
    return "?";
}
}  // namespace

ValidationCurve run_validation(const ValidationConfig& config) {
    if (config.dimension != ApertureDim::Circular2D)
        throw std::invalid_argument(
            "run_validation: only the 2D circular aperture is simulated; spherical "
            "apertures enter the saturation formula only");
    if (config.n_receive.empty())
        throw std::invalid_argument("run_validation: empty n_receive sweep");

    std::vector<int> counts = config.n_receive;
    std::sort(counts.begin(), counts.end());

    const SpatialConstraint constraint(config.radius_wavelengths, ApertureDim::Circular2D);
    const int nsat = saturation_number(constraint);

    ValidationCurve curve;
    curve.scenario = std::string(to_string(config.kind)) + "/" +
                     (config.layout == ArrayLayout::UniformCircular ? "uca" : "ula");

    for (int n_i : counts) {
        const ArrayGeometry geometry = build_geometry(config.layout, n_i,
                                                      config.radius_wavelengths);
        const Eigen::MatrixXcd r = correlation_matrix(geometry);
        const ChannelEnsemble ensemble{config.n_t, config.n_j, config.realizations,
                                       config.seed, r, geometry};

        McStats stats{};
        double approx_corr = 0.0;
        double approx_piecewise = 0.0;
        switch (config.kind) {
            case ValidationKind::Unjammed:
                stats = true_capacity_unjammed(ensemble, config.alpha, config.p_t, config.sigma2);
                approx_corr =
                    approx_capacity_correlation(r, config.alpha, config.p_t, 0.0, 0.0,
                                                config.sigma2);
                approx_piecewise =
                    capacity_unjammed(n_i, nsat, config.alpha * config.p_t, config.sigma2);
                break;
            case ValidationKind::BasicJammed:
                stats = true_capacity_basic_jammed(ensemble, config.alpha, config.p_t,
                                                   config.beta, config.p_j, config.sigma2);
                approx_corr = approx_capacity_correlation(r, config.alpha, config.p_t,
                                                          config.beta, config.p_j, config.sigma2);
                approx_piecewise = capacity_jammed(n_i, nsat, config.alpha * config.p_t,
                                                   config.beta * config.p_j, config.sigma2);
                break;
            case ValidationKind::AnJammed: {
                const Eigen::MatrixXcd r_bob = correlation_matrix(
                    build_geometry(config.layout, config.n_b, config.radius_wavelengths));
                stats = true_capacity_an_jammed(ensemble, config.n_b, r_bob, config.alpha,
                                                config.p_t, config.beta, config.p_j,
                                                config.sigma2);
                approx_corr = approx_capacity_correlation(r, config.alpha, config.p_t,
                                                          config.beta, config.p_j, config.sigma2);
                approx_piecewise = capacity_jammed(n_i, nsat, config.alpha * config.p_t,
                                                   config.beta * config.p_j, config.sigma2);
                break;
            }
        }
        curve.points.push_back({n_i, stats.mean, stats.stderr_mean, stats.stderr_valid,
                                approx_corr, approx_piecewise});
    }
    return curve;
}

}  // namespace secap
