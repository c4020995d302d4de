#ifndef SECAP_NUMERICS_HPP
#define SECAP_NUMERICS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "secap/rng.hpp"

// Shared numerical kernels: Bessel functions, Hermitian log-determinant
// capacities, PSD square roots, null-space bases and seeded correlated
// Gaussian sampling. Dense complex matrices are Eigen::MatrixXcd; Hermitian
// arguments are validated, not assumed.

namespace secap {

/// Eigenvalues of a nominally-PSD matrix in [-kPsdEpsilon*lambda_max, 0) are
/// clamped to zero; anything more negative is an error. Correlation matrices
/// of dense arrays are numerically rank-deficient, so a clamp is part of the
/// contract rather than a workaround.
inline constexpr double kPsdEpsilon = 1e-10;

/// Bessel function of the first kind J_m(x) for integer m >= 0, x >= 0.
/// Absolute error <= 1e-12 over m <= 200, x <= 500.
double bessel_j(int order, double x);

/// log2 det(I + A) for Hermitian PSD A, evaluated as sum log2(1 + lambda_k)
/// over the eigenvalues. Throws std::invalid_argument if A is not Hermitian
/// and std::domain_error if an eigenvalue is below the PSD clamp.
double logdet_capacity(const Eigen::MatrixXcd& a);

/// Hermitian PSD square root via eigendecomposition with clamped eigenvalues.
Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& r);

/// Orthonormal basis Z of the null space of g (rows <= cols, full row rank):
/// g*Z == 0 and Z^H*Z == I, shape cols x (cols - rows). Built from a unitary
/// factorization of g^H so orthonormality is exact to machine precision.
/// A square full-rank g yields a zero-width basis. Throws
/// std::invalid_argument with the measured rank if g is row-rank deficient.
Eigen::MatrixXcd null_space_basis(const Eigen::MatrixXcd& g);

/// Matrix of i.i.d. CN(0,1) entries on the (seed, realization, role) stream,
/// filled in column-major draw order.
Eigen::MatrixXcd sample_standard_gaussian(int rows, int cols, std::uint64_t seed,
                                          std::uint64_t realization = 0,
                                          std::uint32_t role = rng_role::kGeneric);

/// Sample with column covariance r: returns r^{1/2} * W with W i.i.d.
/// CN(0,1). Deterministic for a fixed (seed, realization, role).
Eigen::MatrixXcd sample_correlated_gaussian(const Eigen::MatrixXcd& r, int columns,
                                            std::uint64_t seed,
                                            std::uint64_t realization = 0,
                                            std::uint32_t role = rng_role::kGeneric);

/// Same, with the PSD square root precomputed (per-sweep-point hoisting).
Eigen::MatrixXcd sample_correlated_from_sqrt(const Eigen::MatrixXcd& r_sqrt, int columns,
                                             std::uint64_t seed, std::uint64_t realization,
                                             std::uint32_t role);

}  // namespace secap

#endif
