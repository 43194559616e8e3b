#pragma once

#include <optional>

#include "svv/bigint.hpp"
#include "svv/hyperquiver.hpp"
#include "svv/trunc_poly.hpp"

namespace svv {

enum class EmptyReason { degree_zero, negative_expected_dimension };

/// Dimension/degree classification of the singular vector variety of a
/// generic representation.
struct AnalysisResult {
  bool empty = false;
  std::optional<EmptyReason> reason;             // set iff empty
  std::optional<int> dimension;                  // set iff not empty
  std::optional<BigInt> degree;                  // set iff not empty, > 0
  bool finitely_many = false;                    // dimension == 0

  // Set iff finitely_many: each point has multiplicity one, is not
  // isotropic, and has no singular value equal to zero.
  bool multiplicity_one = false;
  bool non_isotropic = false;
  bool no_zero_singular_value = false;
};

/// Expected dimension N = sum_i (d_i - 1) - sum_e (d_{t(e)} - 1).
/// May be negative.
int expected_dimension(const Hyperquiver& H, const DimensionVector& d);

/// The Chern-class factor of a single edge:
///   sum_{k=1..d_t} h_t^{k-1} * h_s^{d_t-k},  h_s = sum_j h_{s_j(e)}.
TruncPoly edge_factor(const Hyperedge& e, const DimensionVector& d, const RingShape& shape);

/// Product of edge factors over all edges; the top Chern class of the
/// singular vector bundle.
TruncPoly chern_top_class(const Hyperquiver& H, const DimensionVector& d);

/// Coefficient of h_1^{d_1-1}..h_n^{d_n-1} in (sum h_i)^N * F, computed by
/// multinomial extraction over the support of F instead of forming the
/// product.
BigInt extract_degree(const TruncPoly& F, int N);

AnalysisResult analyze(const Hyperquiver& H, const DimensionVector& d);

/// True iff every vertex is the target of exactly one edge; such
/// hyperquivers have N = 0 for every dimension vector.
bool unique_incoming_check(const Hyperquiver& H);

RingShape chow_shape(const DimensionVector& d);

}  // namespace svv
