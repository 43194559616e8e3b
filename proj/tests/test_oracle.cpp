#include <doctest.h>

#include <cmath>
#include <complex>

#include "svv/families.hpp"
#include "svv/oracle.hpp"
#include "svv/roots.hpp"
#include "svv/splitmix64.hpp"

using namespace svv;
using Complex = std::complex<double>;

TEST_CASE("roots_of_polynomial") {
  SUBCASE("z^2 + 1") {
    const RootReport r = roots_of_polynomial({{1, 0}, {0, 0}, {1, 0}});
    REQUIRE(r.roots.size() == 2);
    CHECK(r.distinct_count == 2);
    CHECK_FALSE(r.includes_infinity);
    for (const Complex& z : r.roots) {
      CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-9);
      CHECK(std::abs(z.real()) < 1e-9);
    }
  }
  SUBCASE("(z-1)^2 clusters to one root") {
    const RootReport r = roots_of_polynomial({{1, 0}, {-2, 0}, {1, 0}});
    CHECK(r.distinct_count == 1);
  }
  SUBCASE("vanishing leading coefficient records a root at infinity") {
    const RootReport r = roots_of_polynomial({{-1, 0}, {1, 0}, {0, 0}});
    CHECK(r.includes_infinity);
    CHECK(r.distinct_count == 1);
  }
  SUBCASE("random degree-5 polynomials have 5 distinct roots") {
    SplitMix64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Complex> coeffs(6);
      for (Complex& c : coeffs) c = rng.next_complex();
      const RootReport r = roots_of_polynomial(coeffs);
      CHECK(r.distinct_count == 5);
      // Residual bound on every reported root.
      double max_coeff = 0;
      for (const Complex& c : coeffs) max_coeff = std::max(max_coeff, std::abs(c));
      for (const Complex& z : r.roots) {
        Complex p = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
        CHECK(std::abs(p) <=
              1e-8 * max_coeff * std::pow(std::max(1.0, std::abs(z)), 5));
      }
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS(roots_of_polynomial({{0, 0}, {0, 0}}));
    CHECK_THROWS(roots_of_polynomial({{1, 0}}));
  }
}

TEST_CASE("characteristic_polynomial on a known matrix") {
  // [[2, 1], [0, 3]]: p(x) = x^2 - 5x + 6.
  const std::vector<Complex> A = {{2, 0}, {1, 0}, {0, 0}, {3, 0}};
  const std::vector<Complex> p = characteristic_polynomial(A, 2);
  CHECK(std::abs(p[2] - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(p[1] - Complex(-5, 0)) < 1e-12);
  CHECK(std::abs(p[0] - Complex(6, 0)) < 1e-12);
}

TEST_CASE("oracle counts match the engine predictions") {
  SUBCASE("matrix eigenvectors") {
    for (int d = 2; d <= 5; ++d) {
      const BigInt predicted = eigen_count(2, d);
      for (std::uint64_t seed = 1; seed <= 3; ++seed)
        CHECK(BigInt(matrix_eigen_count(d, seed)) == predicted);
    }
  }
  SUBCASE("binary tensor eigenvectors") {
    for (int m = 3; m <= 5; ++m) {
      CHECK(eigen_count(m, 2) == BigInt(m));
      for (std::uint64_t seed = 1; seed <= 3; ++seed)
        CHECK(binary_tensor_eigen_count(m, seed) == m);
    }
  }
  SUBCASE("generalised eigenpairs") {
    for (int d = 2; d <= 4; ++d) {
      CHECK(kronecker_count(2, d) == BigInt(d));
      for (std::uint64_t seed = 1; seed <= 3; ++seed)
        CHECK(generalized_eigen_count(d, seed) == d);
    }
  }
  SUBCASE("matrix singular pairs") {
    for (int d = 2; d <= 4; ++d) {
      CHECK(fo_count({d, d}) == BigInt(d));
      for (std::uint64_t seed = 1; seed <= 3; ++seed)
        CHECK(matrix_singular_pair_count(d, seed) == d);
    }
  }
}
