#include "svv/analysis.hpp"

#include <algorithm>

namespace svv {

RingShape chow_shape(const DimensionVector& d) { return RingShape(d.dims); }

int expected_dimension(const Hyperquiver& H, const DimensionVector& d) {
  int N = 0;
  for (int i = 1; i <= H.n; ++i) N += d[i] - 1;
  for (const Hyperedge& e : H.edges) N -= d[e.target] - 1;
  return N;
}

TruncPoly edge_factor(const Hyperedge& e, const DimensionVector& d, const RingShape& shape) {
  std::vector<BigInt> source_coeffs(shape.n(), 0);
  for (int s : e.sources) source_coeffs[s - 1] += 1;  // repeated sources add up
  const TruncPoly hs = TruncPoly::linear_form(shape, source_coeffs);
  const TruncPoly ht = TruncPoly::variable(shape, e.target);

  const int dt = d[e.target];
  // Accumulate h_t^{k-1} * hs^{dt-k} for k = dt..1, reusing powers of both.
  TruncPoly result = TruncPoly::zero(shape);
  TruncPoly hs_pow = TruncPoly::one(shape);   // hs^{dt-k}, starting at k = dt
  for (int k = dt; k >= 1; --k) {
    result = result.add(ht.pow(k - 1).mul(hs_pow));
    if (k > 1) hs_pow = hs_pow.mul(hs);
  }
  return result;
}

TruncPoly chern_top_class(const Hyperquiver& H, const DimensionVector& d) {
  const RingShape shape = chow_shape(d);
  std::vector<TruncPoly> factors;
  factors.reserve(H.edges.size());
  for (const Hyperedge& e : H.edges) factors.push_back(edge_factor(e, d, shape));
  // Multiply smallest support first to keep intermediate products sparse.
  std::stable_sort(factors.begin(), factors.end(),
                   [](const TruncPoly& a, const TruncPoly& b) {
                     return a.support_size() < b.support_size();
                   });
  TruncPoly product = TruncPoly::one(shape);
  for (const TruncPoly& f : factors) product = product.mul(f);
  return product;
}

BigInt extract_degree(const TruncPoly& F, int N) {
  if (N < 0) throw std::invalid_argument("extract_degree needs N >= 0");
  const RingShape& shape = F.shape();
  const int n = shape.n();
  BigInt total = 0;
  std::vector<int> gap(n);
  for (long idx = 0; idx < shape.lattice_size(); ++idx) {
    const BigInt& c = F.coefficient_at(idx);
    if (c == 0) continue;
    const std::vector<int> exps = shape.exps_of(idx);
    int gap_sum = 0;
    for (int i = 0; i < n; ++i) {
      gap[i] = shape.bounds[i] - 1 - exps[i];
      gap_sum += gap[i];
    }
    if (gap_sum != N) continue;
    total += c * multinomial(N, gap);
  }
  return total;
}

AnalysisResult analyze(const Hyperquiver& H, const DimensionVector& d) {
  AnalysisResult res;
  const int N = expected_dimension(H, d);
  if (N < 0) {
    res.empty = true;
    res.reason = EmptyReason::negative_expected_dimension;
    return res;
  }
  const BigInt D = extract_degree(chern_top_class(H, d), N);
  if (D == 0) {
    res.empty = true;
    res.reason = EmptyReason::degree_zero;
    return res;
  }
  res.dimension = N;
  res.degree = D;
  res.finitely_many = (N == 0);
  if (res.finitely_many) {
    res.multiplicity_one = true;
    res.non_isotropic = true;
    res.no_zero_singular_value = true;
  }
  return res;
}

bool unique_incoming_check(const Hyperquiver& H) {
  std::vector<int> incoming(H.n, 0);
  for (const Hyperedge& e : H.edges) ++incoming[e.target - 1];
  return std::all_of(incoming.begin(), incoming.end(), [](int c) { return c == 1; });
}

}  // namespace svv
