#include "secap/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace secap {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// Power series sum_k (-1)^k (x/2)^(m+2k) / (k! (m+k)!). Safe for small x;
// for large x the alternating terms outgrow the result and cancel
// catastrophically, hence the cutoff below.
double bessel_series(int m, double x) {
    const double half = 0.5 * x;
    double term = std::exp(static_cast<double>(m) * std::log(half) -
                           std::lgamma(static_cast<double>(m) + 1.0));
    double sum = term;
    const double q = half * half;
    for (int k = 1; k <= 300; ++k) {
        term *= -q / (static_cast<double>(k) * (static_cast<double>(m) + k));
        sum += term;
        if (std::abs(term) < 1e-20 + 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Downward three-term recurrence from above the turning point with an
// arbitrary seed, normalized by J_0 + 2*sum_{k>=1} J_{2k} = 1. The upward
// recurrence is unstable for orders above x; this direction is
// self-correcting there.
double bessel_miller(int m, double x) {
    const int big = std::max(m, static_cast<int>(std::ceil(x)));
    const int start = big + 40 + static_cast<int>(std::ceil(std::sqrt(40.0 * big)));

    double upper = 0.0;    // J_{k+1}
    double value = 1e-30;  // J_k, arbitrary seed at k = start
    double wanted = 0.0;
    double even_sum = 0.0;
    for (int k = start; k >= 1; --k) {
        const double lower = (2.0 * k / x) * value - upper;
        upper = value;
        value = lower;  // now J_{k-1}
        const int idx = k - 1;
        if (idx == m) wanted = value;
        if (idx >= 2 && idx % 2 == 0) even_sum += value;
        if (std::abs(value) > 1e250) {
            value *= 1e-250;
            upper *= 1e-250;
            wanted *= 1e-250;
            even_sum *= 1e-250;
        }
    }
    const double norm = value + 2.0 * even_sum;  // value == J_0 here
    return wanted / norm;
}

void require_square(const Eigen::MatrixXcd& a, const char* where) {
    if (a.rows() != a.cols())
        throw std::invalid_argument(std::string(where) + ": matrix must be square");
}

void require_hermitian(const Eigen::MatrixXcd& a, const char* where) {
    require_square(a, where);
    if (a.rows() == 0) return;
    const double scale = a.cwiseAbs().maxCoeff();
    const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * std::max(scale, 1e-300))
        throw std::invalid_argument(std::string(where) + ": matrix is not Hermitian");
}

}  // namespace

double bessel_j(int order, double x) {
    if (order < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
    if (!(x >= 0.0)) throw std::domain_error("bessel_j: argument must be >= 0");
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    if (x < 12.0) return bessel_series(order, x);
    return bessel_miller(order, x);
}

double logdet_capacity(const Eigen::MatrixXcd& a) {
    require_hermitian(a, "logdet_capacity");
    if (a.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("logdet_capacity: eigendecomposition failed");
    const Eigen::VectorXd& evs = solver.eigenvalues();
    const double floor = -kPsdEpsilon * std::max(evs.maxCoeff(), 0.0) - 1e-300;
    double sum = 0.0;
    for (Eigen::Index k = 0; k < evs.size(); ++k) {
        const double ev = evs[k];
        if (ev < floor)
            throw std::domain_error("logdet_capacity: matrix is not PSD (eigenvalue " +
                                    std::to_string(ev) + ")");
        if (ev > 0.0) sum += std::log1p(ev);
    }
    return sum / kLn2;
}

Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& r) {
    require_hermitian(r, "hermitian_sqrt");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_sqrt: eigendecomposition failed");
    Eigen::VectorXd evs = solver.eigenvalues();
    const double floor = -kPsdEpsilon * std::max(evs.maxCoeff(), 0.0) - 1e-300;
    for (Eigen::Index k = 0; k < evs.size(); ++k) {
        if (evs[k] < floor)
            throw std::domain_error("hermitian_sqrt: matrix is not PSD (eigenvalue " +
                                    std::to_string(evs[k]) + ")");
        evs[k] = evs[k] > 0.0 ? std::sqrt(evs[k]) : 0.0;
    }
    return solver.eigenvectors() * evs.asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::MatrixXcd null_space_basis(const Eigen::MatrixXcd& g) {
    if (g.rows() > g.cols())
        throw std::invalid_argument("null_space_basis: expected rows <= cols");
    if (g.rows() == 0)
        throw std::invalid_argument("null_space_basis: matrix must have at least one row");
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(g.adjoint());
    const auto rank = qr.rank();
    if (rank < g.rows())
        throw std::invalid_argument("null_space_basis: full row rank required, measured rank " +
                                    std::to_string(rank) + " of " + std::to_string(g.rows()) +
                                    " rows");
    const Eigen::MatrixXcd q = qr.householderQ();
    return q.rightCols(g.cols() - g.rows());
}

Eigen::MatrixXcd sample_standard_gaussian(int rows, int cols, std::uint64_t seed,
                                          std::uint64_t realization, std::uint32_t role) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("sample_standard_gaussian: negative shape");
    GaussianStream stream(seed, realization, role);
    Eigen::MatrixXcd w(rows, cols);
    std::uint64_t index = 0;
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) w(r, c) = stream.at(index++);
    return w;
}

Eigen::MatrixXcd sample_correlated_from_sqrt(const Eigen::MatrixXcd& r_sqrt, int columns,
                                             std::uint64_t seed, std::uint64_t realization,
                                             std::uint32_t role) {
    const int rows = static_cast<int>(r_sqrt.rows());
    return r_sqrt * sample_standard_gaussian(rows, columns, seed, realization, role);
}

Eigen::MatrixXcd sample_correlated_gaussian(const Eigen::MatrixXcd& r, int columns,
                                            std::uint64_t seed, std::uint64_t realization,
                                            std::uint32_t role) {
    return sample_correlated_from_sqrt(hermitian_sqrt(r), columns, seed, realization, role);
}

}  // namespace secap
