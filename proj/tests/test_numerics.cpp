#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "secap/numerics.hpp"

using namespace secap;
using Complex = std::complex<double>;

namespace {

// Independent log2|det| oracle: complex Gaussian elimination with partial
// pivoting on plain vectors, no linear-algebra library involved.
double log2_abs_det_lu(std::vector<std::vector<Complex>> m) {
    const std::size_t n = m.size();
    double log2det = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (pivot != col) std::swap(m[pivot], m[col]);
        const Complex diag = m[col][col];
        REQUIRE(std::abs(diag) > 0.0);
        log2det += std::log2(std::abs(diag));
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = m[r][col] / diag;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return log2det;
}

std::vector<std::vector<Complex>> to_rows(const Eigen::MatrixXcd& a) {
    std::vector<std::vector<Complex>> rows(a.rows(), std::vector<Complex>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    return rows;
}

Eigen::MatrixXcd random_complex(int rows, int cols, std::mt19937& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(normal(gen), normal(gen));
    return m;
}

Eigen::MatrixXcd random_psd(int n, std::mt19937& gen) {
    const Eigen::MatrixXcd w = random_complex(n, n + 2, gen);
    return (w * w.adjoint()) / static_cast<double>(n + 2);
}

struct BesselCase {
    int order;
    double x;
    double expected;  // 40-digit mpmath besselj, rounded to double
};

// clang-format off
const BesselCase kBesselLattice[] = {
    {  0, 0.0,                1.0},
    {  1, 0.0,                0.0},
    {  5, 0.0,                0.0},
    {  0, 0.5,                0.93846980724081290},
    {  1, 0.5,                0.24226845767487389},
    {  2, 0.5,                0.030604023458682641},
    {  0, 2.404825557695773, -1.2011950073676861e-16},
    {  1, 2.404825557695773,  0.51914749728946674},
    {  0, 6.283185307179586,  0.22027690853993436},
    {  3, 9.42477796076938,  -0.083900219497442941},
    {  0, 11.5,              -0.067653948111665228},
    {  4, 11.5,               0.096287793682233884},
    { 20, 11.5,               0.00012486857217967876},
    { 60, 11.5,               2.6513298782769022e-37},
    {  0, 12.0,               0.047689310796833537},
    {  1, 12.0,              -0.22344710449062761},
    {  7, 12.0,              -0.17025380412720805},
    {  0, 35.0,              -0.12684568275631257},
    { 10, 35.0,               0.063546391343962840},
    { 34, 35.0,               0.17434696165413326},
    { 60, 35.0,               2.4120888528943901e-10},
    {  0, 126.0,              0.064001635366180066},
    { 50, 126.0,              0.072964159441002175},
    {120, 126.0,              0.11661393208673295},
    {140, 126.0,              0.00063317523720032509},
    {  0, 500.0,             -0.034100556880731998},
    {  1, 500.0,              0.010472613470372293},
    {100, 500.0,              0.034329532854951521},
    {200, 500.0,              0.031202198153727847},
    {200, 150.0,              8.0577021983968538e-14},
    {200, 12.5,               1.5655719843138377e-216},
    {150, 100.0,              2.7229021718820481e-16},
};
// clang-format on

}  // namespace

TEST_CASE("bessel_j matches the high-precision lattice to 1e-12 absolute") {
    for (const BesselCase& c : kBesselLattice) {
        INFO("J_", c.order, "(", c.x, ")");
        CHECK(std::abs(bessel_j(c.order, c.x) - c.expected) <= 1e-12);
    }
}

TEST_CASE("bessel_j recurrence identity J_{m-1} + J_{m+1} = (2m/x) J_m") {
    for (double x : {0.7, 3.3, 12.7, 47.3, 123.4}) {
        for (int m = 1; m <= 60; ++m) {
            const double lhs = bessel_j(m - 1, x) + bessel_j(m + 1, x);
            const double rhs = 2.0 * m / x * bessel_j(m, x);
            CHECK(std::abs(lhs - rhs) <= 1e-10);
        }
    }
}

TEST_CASE("bessel_j decays past the saturation order") {
    // reference magnitudes from the 40-digit oracle at x = 2*pi*r
    const double x_15 = 2.0 * 3.14159265358979323846 * 1.5;  // orders drop from m = 14 on
    CHECK(std::abs(bessel_j(14, x_15) - 0.0064292602989144294) <= 1e-12);
    CHECK(std::abs(bessel_j(16, x_15) - 0.0007264185259343514) <= 1e-12);
    double previous = std::abs(bessel_j(14, x_15));
    for (int m = 15; m <= 24; ++m) {
        const double value = std::abs(bessel_j(m, x_15));
        CHECK(value < previous);
        previous = value;
    }
    CHECK(std::abs(bessel_j(16, x_15)) < 1e-3);

    const double x_10 = 2.0 * 3.14159265358979323846;  // orders drop from m = 10 on
    CHECK(std::abs(bessel_j(10, x_10) - 0.010138456511374265) <= 1e-12);
    CHECK(std::abs(bessel_j(12, x_10) - 0.00088336632952915346) <= 1e-12);
    CHECK(std::abs(bessel_j(12, x_10)) < 1e-3);
}

TEST_CASE("bessel_j domain checks") {
    CHECK_THROWS_AS(bessel_j(-1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j(0, -0.5), std::domain_error);
}

TEST_CASE("logdet_capacity on trivial matrices") {
    CHECK(logdet_capacity(Eigen::MatrixXcd::Zero(4, 4)) == 0.0);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
    diag(0, 0) = 1.0;
    diag(1, 1) = 3.0;
    CHECK(logdet_capacity(diag) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("logdet_capacity agrees with the LU determinant oracle") {
    std::mt19937 gen(20240915);
    for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 40}) {
        const Eigen::MatrixXcd a = 3.0 * random_psd(n, gen);
        const double via_eigenvalues = logdet_capacity(a);
        const Eigen::MatrixXcd inner = Eigen::MatrixXcd::Identity(n, n) + a;
        const double via_lu = log2_abs_det_lu(to_rows(inner));
        CHECK(via_eigenvalues == doctest::Approx(via_lu).epsilon(1e-9));
    }
}

TEST_CASE("logdet_capacity rejects indefinite and non-Hermitian input") {
    Eigen::MatrixXcd indefinite = Eigen::MatrixXcd::Zero(2, 2);
    indefinite(0, 0) = 1.0;
    indefinite(1, 1) = -1.0;
    CHECK_THROWS_AS(logdet_capacity(indefinite), std::domain_error);

    Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(2, 2);
    skew(0, 1) = 1.0;
    skew(1, 0) = 2.0;
    CHECK_THROWS_AS(logdet_capacity(skew), std::invalid_argument);
}

TEST_CASE("logdet_capacity clamps tiny negative eigenvalues") {
    Eigen::MatrixXcd nearly_psd = Eigen::MatrixXcd::Zero(2, 2);
    nearly_psd(0, 0) = 1.0;
    nearly_psd(1, 1) = -1e-12;  // within the relative clamp
    CHECK(logdet_capacity(nearly_psd) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log-det split identity for jammed capacities") {
    // log2|I + aR(bR + sI)^{-1}| == log2|I + ((a+b)/s)R| - log2|I + (b/s)R|
    std::mt19937 gen(77);
    std::uniform_real_distribution<double> unif(0.1, 10.0);
    for (int n : {2, 5, 11, 23, 40}) {
        const Eigen::MatrixXcd r = random_psd(n, gen);
        const double a = unif(gen), b = unif(gen), s = unif(gen);
        const double split = logdet_capacity(((a + b) / s) * r) - logdet_capacity((b / s) * r);
        const Eigen::MatrixXcd denom = b * r + s * Eigen::MatrixXcd::Identity(n, n);
        const Eigen::MatrixXcd single =
            Eigen::MatrixXcd::Identity(n, n) + a * r * denom.inverse();
        CHECK(split == doctest::Approx(log2_abs_det_lu(to_rows(single))).epsilon(1e-9));
    }
}

TEST_CASE("hermitian_sqrt squares back to the input") {
    std::mt19937 gen(5);
    const Eigen::MatrixXcd r = random_psd(6, gen);
    const Eigen::MatrixXcd s = hermitian_sqrt(r);
    CHECK((s * s - r).norm() <= 1e-12 * r.norm());
    Eigen::MatrixXcd negative = Eigen::MatrixXcd::Identity(2, 2);
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(hermitian_sqrt(negative), std::domain_error);
}

TEST_CASE("null_space_basis on an axis-aligned row") {
    Eigen::MatrixXcd g(1, 2);
    g(0, 0) = 1.0;
    g(0, 1) = 0.0;
    const Eigen::MatrixXcd z = null_space_basis(g);
    REQUIRE(z.rows() == 2);
    REQUIRE(z.cols() == 1);
    CHECK(std::abs(z(0, 0)) <= 1e-14);
    CHECK(std::abs(std::abs(z(1, 0)) - 1.0) <= 1e-14);  // e2 up to phase
}

TEST_CASE("null_space_basis contracts on random wide matrices") {
    std::mt19937 gen(99);
    for (int trial = 0; trial < 25; ++trial) {
        const Eigen::MatrixXcd g = random_complex(4, 8, gen);
        const Eigen::MatrixXcd z = null_space_basis(g);
        REQUIRE(z.rows() == 8);
        REQUIRE(z.cols() == 4);
        CHECK((g * z).norm() <= 1e-10 * g.norm());
        CHECK((z.adjoint() * z - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <=
              1e-12);
    }
}

TEST_CASE("null_space_basis edge cases") {
    std::mt19937 gen(7);
    const Eigen::MatrixXcd square = random_complex(3, 3, gen);
    const Eigen::MatrixXcd z = null_space_basis(square);
    CHECK(z.rows() == 3);
    CHECK(z.cols() == 0);

    Eigen::MatrixXcd deficient(2, 4);
    deficient.row(0) = random_complex(1, 4, gen);
    deficient.row(1) = 2.0 * deficient.row(0);
    CHECK_THROWS_WITH_AS(null_space_basis(deficient), doctest::Contains("measured rank 1"),
                         std::invalid_argument);

    CHECK_THROWS_AS(null_space_basis(random_complex(4, 2, gen)), std::invalid_argument);
}

TEST_CASE("counter RNG determinism and stream separation") {
    const Eigen::MatrixXcd a = sample_standard_gaussian(5, 7, 42, 3, rng_role::kTransmitChannel);
    const Eigen::MatrixXcd b = sample_standard_gaussian(5, 7, 42, 3, rng_role::kTransmitChannel);
    CHECK(a == b);  // bit-identical

    const Eigen::MatrixXcd other_role =
        sample_standard_gaussian(5, 7, 42, 3, rng_role::kJamChannel);
    const Eigen::MatrixXcd other_realization =
        sample_standard_gaussian(5, 7, 42, 4, rng_role::kTransmitChannel);
    const Eigen::MatrixXcd other_seed =
        sample_standard_gaussian(5, 7, 43, 3, rng_role::kTransmitChannel);
    CHECK((a - other_role).norm() > 1e-6);
    CHECK((a - other_realization).norm() > 1e-6);
    CHECK((a - other_seed).norm() > 1e-6);
}

TEST_CASE("gaussian stream moments") {
    GaussianStream stream(2024, 0, 0);
    const int n = 200000;
    double mean_re = 0.0, mean_im = 0.0, power = 0.0;
    for (int k = 0; k < n; ++k) {
        const std::complex<double> z = stream.next();
        mean_re += z.real();
        mean_im += z.imag();
        power += std::norm(z);
    }
    CHECK(std::abs(mean_re / n) < 0.01);
    CHECK(std::abs(mean_im / n) < 0.01);
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("sample_correlated_gaussian reproduces the target covariance") {
    // known eigenstructure: Hermitian 3x3 with distinct eigenvalues
    Eigen::MatrixXcd r(3, 3);
    r << Complex(2.0, 0.0), Complex(0.5, 0.25), Complex(0.0, 0.0),
        Complex(0.5, -0.25), Complex(1.0, 0.0), Complex(0.2, -0.1),
        Complex(0.0, 0.0), Complex(0.2, 0.1), Complex(0.5, 0.0);
    const int columns = 100000;
    const Eigen::MatrixXcd h = sample_correlated_gaussian(r, columns, 11, 0, 0);
    const Eigen::MatrixXcd sample_cov = (h * h.adjoint()) / static_cast<double>(columns);
    CHECK((sample_cov - r).norm() <= 0.03 * r.norm());

    // white case: off-diagonals of the sample covariance decay like 1/sqrt(N)
    const Eigen::MatrixXcd white = sample_standard_gaussian(4, columns, 12, 0, 0);
    const Eigen::MatrixXcd white_cov = (white * white.adjoint()) / static_cast<double>(columns);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(std::abs(white_cov(i, j)) < 0.02);

    Eigen::MatrixXcd not_psd = Eigen::MatrixXcd::Identity(2, 2);
    not_psd(1, 1) = -1.0;
    CHECK_THROWS_AS(sample_correlated_gaussian(not_psd, 4, 1, 0, 0), std::domain_error);
}
