#include <doctest.h>

#include "svv/analysis.hpp"
#include "svv/families.hpp"
#include "test_util.hpp"

using namespace svv;

namespace {

BigInt engine_degree(const BuiltFamily& f) {
  const AnalysisResult res = analyze(f.H, f.d);
  return res.empty ? BigInt(0) : *res.degree;
}

}  // namespace

TEST_CASE("builders produce valid data") {
  for (int n = 2; n <= 5; ++n) {
    const BuiltFamily f = build_fo(std::vector<int>(n, 3));
    CHECK_FALSE(validate_hyperquiver(f.H, f.d));
    CHECK_FALSE(validate_partition(f.H, f.P));
  }
  CHECK(unique_incoming_check(build_jordan(3, 4).H));
  CHECK(build_cycle(1, 3, 4).H == build_jordan(3, 4).H);
  CHECK(build_cycle(1, 3, 4).generic_partition);
  CHECK_FALSE(build_cycle(2, 3, 4).generic_partition);

  CHECK_THROWS(build_jordan(1, 3));
  CHECK_THROWS(build_fo({4}));
  CHECK_THROWS(build_star({0, 2}));
}

TEST_CASE("closed-form point values") {
  CHECK(eigen_count(2, 7) == 7);
  CHECK(eigen_count(3, 3) == 7);
  CHECK(eigen_count(4, 2) == 4);

  CHECK(kronecker_count(2, 9) == 9);
  CHECK(kronecker_count(3, 2) == 4);
  CHECK(kronecker_count(3, 3) == 12);

  CHECK(periodic_count(1, 3, 3) == eigen_count(3, 3));
  CHECK(periodic_count(2, 3, 2) == 5);
  CHECK(periodic_count(2, 3, 1) == 1);
  CHECK_THROWS(periodic_count(2, 2, 3));

  CHECK(single_edge_degree({2, 2, 2, 2}) == 24);
  // d = 1 leaves a plain eigenproblem on the k-dimensional vertex.
  CHECK(homology_count(5, 1) == 5);
  CHECK(homology_count(1, 9) == 1);
  CHECK(homology_count(2, 2) == 3);
  CHECK(homology_count(3, 4) == binomial(6, 4));

  CHECK(fo_count({2, 2, 2}) == 6);
  for (int d = 1; d <= 6; ++d) CHECK(fo_count({d, d}) == d);
  CHECK(fo_count({1, 1, 1, 1}) == 1);
  CHECK(fo_count({7}) == 1);
}

TEST_CASE("table identities: d=2 row is n!, n=2 column is 2^{d-1}") {
  for (int n = 2; n <= 10; ++n)
    CHECK(single_edge_degree(std::vector<int>(n, 2)) == factorial(n));
  for (int d = 1; d <= 10; ++d)
    CHECK(single_edge_degree({d, d}) == ipow(2, d - 1));
}

TEST_CASE("closed forms agree with the engine") {
  SUBCASE("eigenvectors") {
    for (int m = 2; m <= 5; ++m)
      for (int d = 1; d <= 6; ++d)
        CHECK(eigen_count(m, d) == engine_degree(build_jordan(m, d)));
  }
  SUBCASE("generalised eigenpairs") {
    for (int m = 2; m <= 4; ++m)
      for (int d = 1; d <= 5; ++d)
        CHECK(kronecker_count(m, d) == engine_degree(build_kronecker(m, d, d)));
  }
  SUBCASE("periodic orbits (engine validates the non-generic count)") {
    for (int n = 1; n <= 3; ++n)
      for (int m = 3; m <= 4; ++m)
        for (int d = 1; d <= 3; ++d)
          CHECK(periodic_count(n, m, d) == engine_degree(build_cycle(n, m, d)));
  }
  SUBCASE("single hyperedge on random dimension vectors") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng.next() % 3);
      std::vector<int> dims;
      for (int i = 0; i < n; ++i) dims.push_back(1 + static_cast<int>(rng.next() % 4));
      CHECK(single_edge_degree(dims) == engine_degree(build_star(dims)));
    }
  }
  SUBCASE("fixed homology classes, including the dimension") {
    for (int k = 1; k <= 5; ++k) {
      for (int d = 1; d <= 5; ++d) {
        const BuiltFamily f = build_homology(k, d);
        const AnalysisResult res = analyze(f.H, f.d);
        REQUIRE_FALSE(res.empty);
        CHECK(*res.dimension == d - 1);
        CHECK(*res.degree == homology_count(k, d));
      }
    }
  }
}

TEST_CASE("fo_count is symmetric in its arguments") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 2);
    std::vector<int> dims;
    for (int i = 0; i < n; ++i) dims.push_back(1 + static_cast<int>(rng.next() % 3));
    const BigInt base = fo_count(dims);
    std::vector<int> shuffled = dims;
    for (int i = n - 1; i > 0; --i)
      std::swap(shuffled[i], shuffled[rng.next() % (i + 1)]);
    CHECK(fo_count(shuffled) == base);
  }
}
