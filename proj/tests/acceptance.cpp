// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each criterion carries its stated runtime budget.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "secap/closed_form.hpp"
#include "secap/model.hpp"
#include "secap/montecarlo.hpp"
#include "secap/numerics.hpp"
#include "secap/presets.hpp"
#include "secap/worst_case.hpp"

using namespace secap;

namespace {

struct CriterionFailure {
    std::string message;
};

void expect(bool condition, const std::string& message) {
    if (!condition) throw CriterionFailure{message};
}

SystemParams wc(SystemKind kind, double alpha_b, double alpha_e, double beta_b, double beta_e,
                double p_t, double p_j, double sigma2_b, double r_b, double r_e, int n_b) {
    return SystemParams(kind, LinkGains(alpha_b, alpha_e, beta_b, beta_e),
                        PowerNoiseConfig(p_t, p_j, sigma2_b, 0.0), SpatialConstraint(r_b),
                        SpatialConstraint(r_e), n_b, EveAntennas::infinite());
}

SystemParams random_wc(std::mt19937& gen, SystemKind kind) {
    std::uniform_real_distribution<double> log_gain(-1.0, 1.0);
    std::uniform_real_distribution<double> log_pt(0.0, 3.0);
    std::uniform_real_distribution<double> log_pj(-1.0, 2.0);
    std::uniform_real_distribution<double> sigma(0.1, 10.0);
    std::uniform_real_distribution<double> radius(0.5, 3.0);
    std::uniform_int_distribution<int> antennas(1, 80);
    return wc(kind, std::pow(10.0, log_gain(gen)), std::pow(10.0, log_gain(gen)),
              std::pow(10.0, log_gain(gen)), std::pow(10.0, log_gain(gen)),
              std::pow(10.0, log_pt(gen)), std::pow(10.0, log_pj(gen)), sigma(gen), radius(gen),
              radius(gen), antennas(gen));
}

SystemParams with_nb(SystemParams params, int n_b) {
    params.n_b = n_b;
    return params;
}

SystemParams with_pj(SystemParams params, double p_j) {
    params.power = PowerNoiseConfig(params.power.p_t, p_j, params.power.sigma2_b, 0.0);
    return params;
}

Eigen::MatrixXcd random_complex(int rows, int cols, std::mt19937& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = std::complex<double>(normal(gen), normal(gen));
    return m;
}

// Independent log2|det| via complex Gaussian elimination, no Eigen solvers.
double log2_abs_det_lu(std::vector<std::vector<std::complex<double>>> m) {
    const std::size_t n = m.size();
    double log2det = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (pivot != col) std::swap(m[pivot], m[col]);
        log2det += std::log2(std::abs(m[col][col]));
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::complex<double> factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return log2det;
}

void criterion_saturation_numbers() {
    expect(saturation_number(SpatialConstraint(1.5)) == 27, "r=1.5 wavelengths must give 27");
    expect(saturation_number(SpatialConstraint(1.0)) == 19, "r=1.0 wavelengths must give 19");
    expect(saturation_number(SpatialConstraint(2.0)) == 37, "r=2.0 wavelengths must give 37");
}

void criterion_optimal_jamming_power() {
    const SystemParams params = wc(SystemKind::BasicJammer, 1, 1, 1, 1, 100.0, 1.0, 1.0, 1.5,
                                   1.0, 30);
    const JammingOptimum optimum = optimal_jamming_power(params);
    expect(optimum.applicable(), "closed form must select a jamming power");
    const double db = linear_to_db(*optimum.selected_pj);
    expect(std::abs(db - 3.43) <= 0.01,
           "selected power " + std::to_string(db) + " dB is not within 0.01 dB of 3.43 dB");
    const GridSearchResult grid =
        grid_search_jamming(params, kDefaultGridPjMin, kDefaultGridPjMax, kDefaultGridPoints);
    const double step_db = 60.0 / (kDefaultGridPoints - 1);
    expect(std::abs(linear_to_db(grid.pj_star) - db) <= step_db + 1e-9,
           "grid argmax deviates by more than one grid step");
}

void criterion_minimum_antennas() {
    const SystemParams reference =
        wc(SystemKind::AnJammer, 10, 10, 10, 10, 100.0, 1.0, 1.0, 8.0, 10.0, 1);
    const FeasibilityReport report = min_bob_antennas(reference);
    expect(report.feasible && report.n_b_min.has_value(), "reference scenario must be feasible");
    expect(*report.n_b_min == 116,
           "reference scenario must need exactly 116 antennas, got " +
               std::to_string(*report.n_b_min));

    std::mt19937 gen(2025);
    int verified = 0;
    int attempts = 0;
    while (verified < 100 && attempts < 4000) {
        ++attempts;
        const SystemKind kind =
            (attempts % 2 == 0) ? SystemKind::BasicJammer : SystemKind::AnJammer;
        const SystemParams params = random_wc(gen, kind);
        const FeasibilityReport r = min_bob_antennas(params);
        if (!r.feasible || r.degenerate || *r.n_b_min > 1500) continue;
        int first_positive = -1;
        for (int n = 1; n <= *r.n_b_min + 2; ++n) {
            if (worst_case_secrecy(with_nb(params, n)) > 0.0) {
                first_positive = n;
                break;
            }
        }
        expect(first_positive == *r.n_b_min,
               "formula " + std::to_string(*r.n_b_min) + " != scan " +
                   std::to_string(first_positive));
        ++verified;
    }
    expect(verified == 100, "could not assemble 100 feasible randomized parameter sets");
}

void criterion_worst_case_structure() {
    std::mt19937 gen(99);
    for (int trial = 0; trial < 1000; ++trial)
        expect(worst_case_secrecy(random_wc(gen, SystemKind::Wiretap)) == 0.0,
               "wiretap worst case must be exactly zero");

    int infeasible_checked = 0;
    for (int trial = 0; trial < 4000 && infeasible_checked < 50; ++trial) {
        const SystemParams params = random_wc(gen, SystemKind::BasicJammer);
        if (!zero_capacity_condition(params)) continue;
        const FeasibilityReport report = min_bob_antennas(params);
        expect(!report.feasible &&
                   report.binding_condition == FeasibilityCondition::Infeasible,
               "saturated-limit condition must report Infeasible");
        ++infeasible_checked;
    }
    expect(infeasible_checked >= 50, "not enough zero-capacity draws sampled");

    for (int trial = 0; trial < 100; ++trial) {
        const SystemParams params = random_wc(gen, SystemKind::AnJammer);
        double previous = -1.0;
        for (int k = 0; k <= 60; ++k) {
            const double pj = std::pow(10.0, (-30.0 + k) / 10.0);
            const double cs = worst_case_secrecy(with_pj(params, pj));
            expect(cs >= previous, "null-space worst case must be nondecreasing in p_j");
            previous = cs;
        }
    }
}

void criterion_monte_carlo_validation() {
    std::ostringstream problems;
    for (int figure : {9, 10}) {
        for (ArrayLayout layout : {ArrayLayout::UniformCircular, ArrayLayout::UniformLinear}) {
            const ValidationCurve curve =
                run_validation(make_validation_config(figure, layout, 200, 1));
            const char* name = layout == ArrayLayout::UniformCircular ? "uca" : "ula";
            for (const ValidationPoint& p : curve.points) {
                const double gap =
                    std::abs(p.true_capacity_mean - p.approx_correlation) / p.approx_correlation;
                if (gap > 0.10)
                    problems << "\n  fig" << figure << "/" << name << " N=" << p.n_receive
                             << ": relative gap " << gap << " > 0.10";
                if (p.n_receive <= 10) {
                    const double deviation =
                        std::abs(p.true_capacity_mean - p.approx_correlation);
                    if (deviation > 3.0 * p.true_capacity_stderr)
                        problems << "\n  fig" << figure << "/" << name << " N=" << p.n_receive
                                 << ": |mc-approx| = " << deviation << " > 3*stderr = "
                                 << 3.0 * p.true_capacity_stderr << " (z = "
                                 << deviation / p.true_capacity_stderr << ")";
                }
            }
        }
    }
    expect(problems.str().empty(), "validation gates violated:" + problems.str());
}

void criterion_logdet_split_identity() {
    std::mt19937 gen(4242);
    std::uniform_int_distribution<int> order(1, 40);
    std::uniform_real_distribution<double> unif(0.1, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = order(gen);
        const Eigen::MatrixXcd w = random_complex(n, n + 2, gen);
        const Eigen::MatrixXcd r = (w * w.adjoint()) / static_cast<double>(n + 2);
        const double a = unif(gen), b = unif(gen), s = unif(gen);
        const double split = logdet_capacity(((a + b) / s) * r) - logdet_capacity((b / s) * r);
        const Eigen::MatrixXcd single = Eigen::MatrixXcd::Identity(n, n) +
                                        a * r * (b * r + s * Eigen::MatrixXcd::Identity(n, n))
                                                    .inverse();
        std::vector<std::vector<std::complex<double>>> rows(n,
                                                            std::vector<std::complex<double>>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rows[i][j] = single(i, j);
        const double direct = log2_abs_det_lu(std::move(rows));
        expect(std::abs(split - direct) <= 1e-9 * std::max(1.0, std::abs(direct)),
               "split identity mismatch at order " + std::to_string(n));
    }
}

void criterion_null_space_contract() {
    std::mt19937 gen(31337);
    std::uniform_int_distribution<int> bob(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n_b = bob(gen);
        std::uniform_int_distribution<int> jam(n_b + 1, 32);
        const int n_j = jam(gen);
        const Eigen::MatrixXcd g_b = random_complex(n_b, n_j, gen);
        const Eigen::MatrixXcd z = null_space_basis(g_b);
        const Eigen::MatrixXcd v = random_complex(n_j - n_b, 1, gen);
        const Eigen::VectorXcd w2 = z * v;
        expect((g_b * w2).norm() <= 1e-10 * v.norm(), "null-space residual too large");
        expect((z.adjoint() * z -
                Eigen::MatrixXcd::Identity(n_j - n_b, n_j - n_b))
                       .cwiseAbs()
                       .maxCoeff() <= 1e-12,
               "basis not orthonormal to 1e-12");
    }

    // cross-covariance of two columns of K = G_e Z over 1e4 draws
    const int n_e = 4, n_b = 2, n_j = 8, draws = 10000;
    const Eigen::MatrixXcd r_e =
        correlation_matrix(build_geometry(ArrayLayout::UniformCircular, n_e, 1.0));
    const Eigen::MatrixXcd sqrt_e = hermitian_sqrt(r_e);
    const Eigen::MatrixXcd r_b =
        correlation_matrix(build_geometry(ArrayLayout::UniformCircular, n_b, 1.0));
    const Eigen::MatrixXcd sqrt_b = hermitian_sqrt(r_b);
    std::complex<double> sum = 0.0;
    double sum_sq_re = 0.0, sum_sq_im = 0.0;
    for (int d = 0; d < draws; ++d) {
        const Eigen::MatrixXcd g_b =
            sample_correlated_from_sqrt(sqrt_b, n_j, 777, d, rng_role::kJamToBobChannel);
        const Eigen::MatrixXcd k =
            sample_correlated_from_sqrt(sqrt_e, n_j, 777, d, rng_role::kJamChannel) *
            null_space_basis(g_b);
        const std::complex<double> inner = (k.col(0).adjoint() * k.col(1))(0, 0);
        sum += inner;
        sum_sq_re += inner.real() * inner.real();
        sum_sq_im += inner.imag() * inner.imag();
    }
    const std::complex<double> mean = sum / static_cast<double>(draws);
    const double var_re = sum_sq_re / draws - mean.real() * mean.real();
    const double var_im = sum_sq_im / draws - mean.imag() * mean.imag();
    const double se = std::sqrt((var_re + var_im) / draws);
    expect(std::abs(mean) <= 5.0 * se,
           "column cross-covariance " + std::to_string(std::abs(mean)) + " exceeds 5 se " +
               std::to_string(5.0 * se));
}

void criterion_piecewise_continuity_and_dominance() {
    std::mt19937 gen(864);
    std::uniform_real_distribution<double> power(0.01, 1000.0);
    std::uniform_int_distribution<int> sat(3, 61);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n_sat = sat(gen) | 1;
        const double signal = power(gen), interference = power(gen), noise = power(gen);
        const double below = n_sat * std::log2(1.0 + signal / (interference + noise));
        const double ratio = static_cast<double>(n_sat) / n_sat;
        const double above = n_sat * std::log2(1.0 + (ratio * signal) /
                                                         (ratio * interference + noise));
        expect(below == above, "piecewise branches must agree exactly at n == n_sat");
    }

    ScenarioConfig cfg;
    cfg.n_b = 35;
    for (int n_e = 1; n_e <= 60; ++n_e) {
        const double wiretap =
            secrecy_capacity(make_params(SystemKind::Wiretap, cfg, n_e)).c_s;
        const double basic =
            secrecy_capacity(make_params(SystemKind::BasicJammer, cfg, n_e)).c_s;
        const double an = secrecy_capacity(make_params(SystemKind::AnJammer, cfg, n_e)).c_s;
        expect(an >= wiretap && an >= basic,
               "null-space jamming must dominate at n_e = " + std::to_string(n_e));
    }
}

void criterion_asymptotic_limits() {
    std::mt19937 gen(1357);
    std::uniform_real_distribution<double> gain(0.2, 5.0);
    std::uniform_real_distribution<double> pt(1.0, 1000.0);
    std::uniform_real_distribution<double> pj(0.5, 50.0);
    std::uniform_real_distribution<double> noise(0.1, 10.0);
    std::uniform_real_distribution<double> radius(0.5, 2.5);
    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = gain(gen), beta = gain(gen);
        const double p_t = pt(gen), p_j = pj(gen), sigma2 = noise(gen);
        const int n_sat = saturation_number(SpatialConstraint(radius(gen)));
        const double limit = n_sat * std::log2(1.0 + alpha * p_t / (beta * p_j));
        const double at_million =
            capacity_jammed(1000000, n_sat, alpha * p_t, beta * p_j, sigma2);
        expect(std::abs(at_million - limit) <= 1e-3 * limit,
               "capacity at n = 1e6 deviates from the saturated limit by more than 1e-3");
    }
}

struct Criterion {
    int index;
    std::string title;
    double budget_seconds;
    std::function<void()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "saturation numbers 27/19/37", 1e-3, criterion_saturation_numbers},
        {2, "optimal jamming power 3.43 dB with grid agreement", 1.0,
         criterion_optimal_jamming_power},
        {3, "minimum Bob antennas: 116 reference and formula == search x100", 5.0,
         criterion_minimum_antennas},
        {4, "worst-case structure: wiretap zero, infeasibility, monotone null-space jamming",
         5.0, criterion_worst_case_structure},
        {5, "Monte-Carlo validation gates (gap <= 10%, 3-stderr consistency at small N)",
         600.0, criterion_monte_carlo_validation},
        {6, "log-det split identity to 1e-9 on 50 random PSD matrices", 5.0,
         criterion_logdet_split_identity},
        {7, "null-space contract and uncorrelated equivalent jam channel", 30.0,
         criterion_null_space_contract},
        {8, "piecewise continuity and system dominance", 5.0,
         criterion_piecewise_continuity_and_dominance},
        {9, "saturated-limit asymptotics at n = 1e6", 1.0, criterion_asymptotic_limits},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            criterion.body();
        } catch (const CriterionFailure& f) {
            failure = f.message;
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && elapsed > criterion.budget_seconds) {
            std::ostringstream over;
            over << "runtime " << elapsed << " s exceeds the " << criterion.budget_seconds
                 << " s budget";
            failure = over.str();
        }
        if (failure.empty()) {
            std::cout << "[PASS] criterion " << criterion.index << ": " << criterion.title
                      << " (" << elapsed * 1e3 << " ms)\n";
        } else {
            std::cout << "[FAIL] criterion " << criterion.index << ": " << criterion.title
                      << " (" << elapsed * 1e3 << " ms) -- " << failure << "\n";
            ++failures;
        }
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
