#include "svv/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace svv {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BuiltFamily build_jordan(int m, int d) {
  require(m >= 2, "jordan: m >= 2 required");
  require(d >= 1, "jordan: d >= 1 required");
  BuiltFamily f;
  f.H.n = 1;
  f.H.edges.push_back({std::vector<int>(m - 1, 1), 1});
  f.d.dims = {d};
  f.P = singleton_partition(f.H);
  return f;
}

BuiltFamily build_fo(const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  require(n >= 2, "fo: at least two vertices required");
  for (int di : dims) require(di >= 1, "fo: dimensions must be positive");
  BuiltFamily f;
  f.H.n = n;
  f.d.dims = dims;
  for (int i = 1; i <= n; ++i) {
    Hyperedge e;
    for (int j = 1; j <= n; ++j)
      if (j != i) e.sources.push_back(j);
    e.target = i;
    f.H.edges.push_back(e);
  }
  // One class anchored at e_1. v(e_1) = (2,..,n,1) has distinct entries, so
  // the permutation matching v(e_i) into it is unique.
  f.P.class_of.assign(n, 1);
  f.P.representative = {0};
  f.P.perm_of.resize(n);
  const std::vector<int> rep_tuple = f.H.edges[0].vertex_tuple();
  for (int k = 0; k < n; ++k) {
    const std::vector<int> tuple = f.H.edges[k].vertex_tuple();
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) {
      auto it = std::find(rep_tuple.begin(), rep_tuple.end(), tuple[j]);
      perm[j] = static_cast<int>(it - rep_tuple.begin()) + 1;
    }
    f.P.perm_of[k] = perm;
  }
  return f;
}

BuiltFamily build_kronecker(int m, int d1, int d2) {
  require(m >= 2, "kronecker: m >= 2 required");
  require(d1 >= 1 && d2 >= 1, "kronecker: dimensions must be positive");
  BuiltFamily f;
  f.H.n = 2;
  f.H.edges.push_back({std::vector<int>(m - 1, 1), 2});
  f.H.edges.push_back({std::vector<int>(m - 1, 1), 2});
  f.d.dims = {d1, d2};
  f.P = singleton_partition(f.H);
  return f;
}

BuiltFamily build_cycle(int n, int m, int d) {
  require(n >= 1, "cycle: n >= 1 required");
  require(m >= 2, "cycle: m >= 2 required");
  require(d >= 1, "cycle: d >= 1 required");
  BuiltFamily f;
  f.H.n = n;
  f.d.dims.assign(n, d);
  for (int i = 1; i <= n; ++i)
    f.H.edges.push_back({std::vector<int>(m - 1, i), i % n + 1});
  f.P = singleton_partition(f.H);
  // The canonical period-n representation puts the same tensor on every edge,
  // which for n >= 2 is not covered by the genericity condition.
  f.generic_partition = (n == 1);
  return f;
}

BuiltFamily build_star(const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  require(n >= 2, "star: at least two vertices required");
  for (int di : dims) require(di >= 1, "star: dimensions must be positive");
  BuiltFamily f;
  f.H.n = n;
  f.d.dims = dims;
  Hyperedge e;
  for (int i = 1; i < n; ++i) e.sources.push_back(i);
  e.target = n;
  f.H.edges.push_back(e);
  f.P = singleton_partition(f.H);
  return f;
}

BuiltFamily build_homology(int k, int d) {
  require(k >= 1 && d >= 1, "homology: k, d >= 1 required");
  BuiltFamily f;
  f.H.n = 2;
  f.H.edges.push_back({{1, 2}, 1});
  f.d.dims = {k, d};
  f.P = singleton_partition(f.H);
  return f;
}

BigInt eigen_count(int m, int d) {
  require(m >= 2, "eigen_count: m >= 2 required");
  require(d >= 1, "eigen_count: d >= 1 required");
  if (m == 2) return d;
  return (ipow(m - 1, d) - 1) / (m - 2);
}

BigInt kronecker_count(int m, int d) {
  require(m >= 2, "kronecker_count: m >= 2 required");
  require(d >= 1, "kronecker_count: d >= 1 required");
  return d * ipow(m - 1, d - 1);
}

BigInt periodic_count(int n, int m, int d) {
  require(n >= 1, "periodic_count: n >= 1 required");
  require(m >= 3, "periodic_count: m >= 3 required (denominator vanishes at m = 2)");
  require(d >= 1, "periodic_count: d >= 1 required");
  // Geometric series in (m-1)^n; the quotient form divides exactly.
  BigInt sum = 0;
  for (int k = 1; k <= d; ++k) sum += ipow(m - 1, n * (d - k));
  return sum;
}

BigInt single_edge_degree(const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  require(n >= 2, "single_edge_degree: at least two vertices required");
  const int dn = dims[n - 1];
  int N = 1 - n;
  for (int i = 0; i < n - 1; ++i) N += dims[i];
  if (N < 0) return 0;

  BigInt total = 0;
  std::vector<int> ks(n - 1, 0);
  std::vector<int> lower(n);
  for (int k = 1; k <= dn; ++k) {
    const int budget = dn - k;
    // Enumerate compositions k_1 + .. + k_{n-1} = budget.
    std::fill(ks.begin(), ks.end(), 0);
    ks[0] = budget;
    while (true) {
      BigInt term = multinomial(budget, ks);
      for (int i = 0; i < n - 1; ++i) lower[i] = dims[i] - 1 - ks[i];
      lower[n - 1] = budget;
      term *= multinomial(N, lower);
      total += term;

      // Next composition in colex-style order.
      int i = 0;
      while (i < n - 2 && ks[i] == 0) ++i;
      if (i >= n - 2) break;
      const int carry = ks[i] - 1;
      ks[i] = 0;
      ++ks[i + 1];
      ks[0] = carry;
    }
  }
  return total;
}

BigInt homology_count(int k, int d) {
  require(k >= 1 && d >= 1, "homology_count: k, d >= 1 required");
  // Coefficient of h1^{k-1} h2^{d-1} in (h1+h2)^{d-1} sum_j h1^{j-1}(h1+h2)^{k-j}:
  // sum_j C(d-1+k-j, d-1), the hockey-stick sum C(k+d-1, d).
  BigInt total = 0;
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i <= k - j; ++i) total += binomial(k - j, i) * binomial(d - 1, k - i - j);
  return total;
}

BigInt fo_count(const std::vector<int>& dims) {
  require(!dims.empty(), "fo_count: at least one dimension required");
  if (dims.size() == 1) return 1;  // a single vector has one direction
  const BuiltFamily f = build_fo(dims);
  const AnalysisResult res = analyze(f.H, f.d);
  return res.empty ? BigInt(0) : *res.degree;
}

}  // namespace svv
