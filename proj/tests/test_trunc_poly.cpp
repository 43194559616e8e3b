#include <doctest.h>

#include "svv/trunc_poly.hpp"
#include "test_util.hpp"

using namespace svv;

TEST_CASE("constants and variables") {
  const RingShape shape({2, 1, 3});
  CHECK(TruncPoly::variable(shape, 2).is_zero());  // d_2 = 1, h_2 in the ideal
  CHECK(TruncPoly::one(shape) != TruncPoly::zero(shape));
  const TruncPoly h1 = TruncPoly::variable(shape, 1);
  CHECK(h1.mul(h1).is_zero());  // d_1 = 2
  CHECK_THROWS(TruncPoly::variable(shape, 4));
}

TEST_CASE("binomial truncation examples") {
  {
    const RingShape shape({2});
    const TruncPoly p = TruncPoly::one(shape).add(TruncPoly::variable(shape, 1));
    CHECK(p.pow(3).to_string() == "1 + 3*h1");
  }
  {
    const RingShape shape({2, 2});
    const TruncPoly s =
        TruncPoly::variable(shape, 1).add(TruncPoly::variable(shape, 2));
    CHECK(s.pow(2).to_string() == "2*h1*h2");
  }
}

TEST_CASE("two-edge contraction example: top coefficient 15") {
  const RingShape shape({3, 3});
  const TruncPoly h1 = TruncPoly::variable(shape, 1);
  const TruncPoly h2 = TruncPoly::variable(shape, 2);
  const TruncPoly s = h1.add(h2);
  const TruncPoly factor = s.pow(2).add(h1.mul(s)).add(h1.mul(h1));
  const TruncPoly sq = factor.pow(2);
  CHECK(sq.coefficient({2, 2}) == 15);
  CHECK(sq.to_string() == "15*h1^2*h2^2");
}

TEST_CASE("linear forms") {
  const RingShape shape({5});
  const TruncPoly p = TruncPoly::linear_form(shape, {BigInt(2)});
  CHECK(p.coefficient({1}) == 2);

  const RingShape shape3({2, 2, 2});
  const TruncPoly q = TruncPoly::linear_form(shape3, {BigInt(1), BigInt(1), BigInt(1)});
  CHECK(q.to_string() == "1*h1 + 1*h2 + 1*h3");

  const RingShape ones({1, 1});
  CHECK(TruncPoly::linear_form(ones, {BigInt(3), BigInt(4)}).is_zero());
}

TEST_CASE("coefficient access errors") {
  const RingShape shape({2, 2});
  const TruncPoly p = TruncPoly::one(shape);
  CHECK(p.coefficient({0, 0}) == 1);
  CHECK_THROWS(p.coefficient({2, 0}));
  CHECK_THROWS(TruncPoly::one(RingShape({2})).add(p));
}

TEST_CASE("ring axioms on random samples") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 250; ++trial) {
    const RingShape shape = testutil::random_shape(rng, 4, 256);
    const TruncPoly p = testutil::random_poly(rng, shape);
    const TruncPoly q = testutil::random_poly(rng, shape);
    const TruncPoly r = testutil::random_poly(rng, shape);
    CHECK(p.add(q) == q.add(p));
    CHECK(p.mul(q) == q.mul(p));
    CHECK(p.mul(q.mul(r)) == p.mul(q).mul(r));
    CHECK(p.add(q.add(r)) == p.add(q).add(r));
    CHECK(p.mul(q.add(r)) == p.mul(q).add(p.mul(r)));
    CHECK(p.mul(TruncPoly::one(shape)) == p);
    CHECK(p.add(TruncPoly::zero(shape)) == p);
  }
}

TEST_CASE("nilpotency and pow agrees with repeated mul") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RingShape shape = testutil::random_shape(rng, 3, 128);
    for (int i = 1; i <= shape.n(); ++i)
      CHECK(TruncPoly::variable(shape, i).pow(shape.bounds[i - 1]).is_zero());
    const TruncPoly p = testutil::random_poly(rng, shape);
    TruncPoly fold = TruncPoly::one(shape);
    for (int k = 0; k <= 5; ++k) {
      CHECK(p.pow(k) == fold);
      fold = fold.mul(p);
    }
  }
}

TEST_CASE("coefficients exceed 64-bit range without overflow") {
  // (h1 + .. + h6)^30 in bounds (6,..,6): the top coefficient is the
  // multinomial 30!/(5!)^6, which does not fit in 64 bits.
  const RingShape shape(std::vector<int>(6, 6));
  std::vector<BigInt> ones(6, BigInt(1));
  const TruncPoly s = TruncPoly::linear_form(shape, ones);
  const BigInt c = s.pow(30).coefficient({5, 5, 5, 5, 5, 5});
  CHECK(c == BigInt("88832646059788350720"));
}
