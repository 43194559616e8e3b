#include "svv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace svv {

namespace {

using Complex = std::complex<double>;

double max_abs(const std::vector<Complex>& coeffs) {
  double m = 0;
  for (const Complex& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

/// Horner evaluation of p and p'.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& coeffs, Complex z) {
  Complex p = 0, dp = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[k];
  }
  return {p, dp};
}

int cluster_count(const std::vector<Complex>& roots, double tol) {
  const int n = static_cast<int>(roots.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(roots[i]), std::abs(roots[j])});
      if (std::abs(roots[i] - roots[j]) <= tol * scale) parent[find(i)] = find(j);
    }
  }
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++count;
  return count;
}

}  // namespace

RootReport roots_of_polynomial(std::vector<Complex> coeffs, const RootOptions& options) {
  RootReport report;
  const double scale = max_abs(coeffs);
  if (scale == 0) throw std::invalid_argument("zero polynomial has no well-defined roots");

  // Strip numerically-zero leading coefficients; each one is a projective
  // root at infinity.
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-12 * scale) {
    coeffs.pop_back();
    report.includes_infinity = true;
    ++report.infinity_count;
  }
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) {
    if (report.includes_infinity) return report;
    throw std::invalid_argument("polynomial has degree zero");
  }

  // Cauchy bound on root modulus, with a symmetry-breaking angular offset.
  double bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(coeffs[k] / coeffs[deg]));
  const double radius = 1.0 + bound;
  std::vector<Complex> z(deg);
  for (int k = 0; k < deg; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / deg + 0.4;
    z[k] = radius * Complex(std::cos(angle), std::sin(angle));
  }

  // Iterate until every correction stagnates at rounding level. Stopping on
  // step size rather than on the residual bound lets clustered roots polish
  // well past tol_converge, so that a multiple root's approximants end up
  // within the clustering distance of each other.
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool stagnated = true;
    for (int k = 0; k < deg; ++k) {
      auto [p, dp] = eval_with_derivative(coeffs, z[k]);
      const Complex newton = (dp != Complex(0)) ? p / dp : Complex(1e-8, 1e-8);
      Complex repulsion = 0;
      for (int j = 0; j < deg; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      if (std::abs(step) > 1e-14 * std::max(1.0, std::abs(z[k]))) stagnated = false;
      z[k] -= step;
    }
    if (stagnated) break;
  }
  // The residual bound is the contract; the step criterion is only a
  // stopping heuristic.
  for (int k = 0; k < deg; ++k) {
    const auto [p, dp] = eval_with_derivative(coeffs, z[k]);
    const double mag = std::max(1.0, std::abs(z[k]));
    if (std::abs(p) > options.tol_converge * scale * std::pow(mag, deg))
      throw std::runtime_error("root finding did not converge within iteration budget");
  }

  report.roots = std::move(z);
  report.distinct_count = cluster_count(report.roots, options.tol_cluster);
  return report;
}

}  // namespace svv
