#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "svv/roots.hpp"

namespace svv {

/// Numeric verification of predicted counts on instances that reduce to
/// one-variable root finding. All randomness comes from the splitmix64
/// stream seeded explicitly; counts are deterministic per (params, seed).

/// Distinct projective eigenvector directions of a random complex d x d
/// matrix. Also checks each eigenvector x against the bilinear form:
/// |x^T x| > 1e-6 |x|^2 (throws on an isotropic eigenvector, which a
/// generic matrix never produces).
int matrix_eigen_count(int d, std::uint64_t seed);

/// Distinct projective eigenvectors of a random tensor in (C^2)^{tensor m}:
/// roots of the binary form f_1 x_2 - f_2 x_1, degree m, counted with the
/// point at infinity.
int binary_tensor_eigen_count(int m, std::uint64_t seed);

/// Distinct roots of det(A - lambda B) for random complex d x d matrices,
/// obtained by evaluation at d+1 nodes and interpolation.
int generalized_eigen_count(int d, std::uint64_t seed);

/// Distinct eigen-directions of A^T A (transpose, not conjugate transpose)
/// for a random complex d x d matrix.
int matrix_singular_pair_count(int d, std::uint64_t seed);

/// Characteristic polynomial of a complex matrix by Faddeev-LeVerrier,
/// ascending coefficients, monic. Exposed for tests.
std::vector<std::complex<double>> characteristic_polynomial(
    const std::vector<std::complex<double>>& matrix, int d);

}  // namespace svv
