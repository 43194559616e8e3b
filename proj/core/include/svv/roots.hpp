#pragma once

#include <complex>
#include <vector>

namespace svv {

struct RootReport {
  std::vector<std::complex<double>> roots;  // finite roots
  int distinct_count = 0;                   // finite roots after clustering
  bool includes_infinity = false;           // leading coefficient vanished
  int infinity_count = 0;                   // number of stripped leading coefficients
};

struct RootOptions {
  double tol_converge = 1e-12;
  double tol_cluster = 1e-6;
  int max_iterations = 500;
};

/// All complex roots of a polynomial, coefficients in ascending order
/// (coeffs[k] multiplies z^k), by Aberth-Ehrlich simultaneous iteration.
/// Leading coefficients below 1e-12 relative to the largest coefficient
/// are stripped and recorded as projective roots at infinity. Throws
/// std::runtime_error on non-convergence.
RootReport roots_of_polynomial(std::vector<std::complex<double>> coeffs,
                               const RootOptions& options = {});

}  // namespace svv
