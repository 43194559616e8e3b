#pragma once

#include <string>
#include <vector>

#include "svv/bigint.hpp"

namespace svv {

/// Exponent bounds of the quotient ring Z[h_1..h_n]/(h_1^{d_1},..,h_n^{d_n}).
/// The exponent of h_i ranges over [0, d_i).
struct RingShape {
  std::vector<int> bounds;

  explicit RingShape(std::vector<int> b);
  RingShape() = default;

  int n() const { return static_cast<int>(bounds.size()); }
  long lattice_size() const { return size_; }

  /// Dense index of an exponent vector; index = sum a_i * stride_i with
  /// stride_1 = 1, so increasing index order is colexicographic order.
  long index_of(const std::vector<int>& exps) const;
  std::vector<int> exps_of(long index) const;

  bool operator==(const RingShape& o) const { return bounds == o.bounds; }

 private:
  std::vector<long> strides_;
  long size_ = 0;
};

/// Element of the truncated polynomial ring, stored as a dense table of
/// exact integer coefficients. Immutable in spirit: all operations return
/// new values.
class TruncPoly {
 public:
  explicit TruncPoly(RingShape shape);  // zero

  static TruncPoly zero(const RingShape& shape) { return TruncPoly(shape); }
  static TruncPoly one(const RingShape& shape);
  /// h_i; the zero polynomial when d_i = 1 (h_i lies in the ideal).
  static TruncPoly variable(const RingShape& shape, int i);
  /// sum c_i h_i.
  static TruncPoly linear_form(const RingShape& shape, const std::vector<BigInt>& coeffs);

  const RingShape& shape() const { return shape_; }
  const BigInt& coefficient(const std::vector<int>& exps) const;
  const BigInt& coefficient_at(long index) const { return coeffs_[index]; }
  void set_coefficient(const std::vector<int>& exps, BigInt value);

  bool is_zero() const;
  long support_size() const;

  TruncPoly add(const TruncPoly& other) const;
  TruncPoly mul(const TruncPoly& other) const;
  TruncPoly pow(int k) const;

  bool operator==(const TruncPoly& o) const { return shape_ == o.shape_ && coeffs_ == o.coeffs_; }

  /// Canonical rendering: terms in colexicographic exponent order, each as
  /// c*h1^a1*...*hn^an with zero exponents omitted and ^1 left implicit.
  std::string to_string() const;

 private:
  RingShape shape_;
  std::vector<BigInt> coeffs_;
};

}  // namespace svv
