#pragma once

#include <vector>

#include "svv/hyperquiver.hpp"
#include "svv/splitmix64.hpp"
#include "svv/trunc_poly.hpp"

namespace svv::testutil {

/// Ring shape with lattice size at most max_lattice.
inline RingShape random_shape(SplitMix64& rng, int max_vars, long max_lattice) {
  const int n = 1 + static_cast<int>(rng.next() % max_vars);
  std::vector<int> bounds(n);
  long lattice = 1;
  for (int i = 0; i < n; ++i) {
    const long room = max_lattice / lattice;
    const int cap = room >= 4 ? 4 : static_cast<int>(room);
    bounds[i] = 1 + static_cast<int>(rng.next() % (cap >= 1 ? cap : 1));
    lattice *= bounds[i];
  }
  return RingShape(bounds);
}

/// Sparse-ish polynomial with coefficients in [-9, 9].
inline TruncPoly random_poly(SplitMix64& rng, const RingShape& shape) {
  TruncPoly p(shape);
  const long terms = 1 + static_cast<long>(rng.next() % (shape.lattice_size() / 2 + 1));
  for (long t = 0; t < terms; ++t) {
    const long idx = static_cast<long>(rng.next() % shape.lattice_size());
    p.set_coefficient(shape.exps_of(idx), BigInt(rng.next_entry(9)));
  }
  return p;
}

/// Valid hyperquiver with the singleton partition, small dims.
inline std::pair<Hyperquiver, DimensionVector> random_hyperquiver(SplitMix64& rng, int max_n,
                                                                  int max_dim, int max_edges,
                                                                  int max_mu) {
  Hyperquiver H;
  H.n = 1 + static_cast<int>(rng.next() % max_n);
  DimensionVector d;
  for (int i = 0; i < H.n; ++i) d.dims.push_back(1 + static_cast<int>(rng.next() % max_dim));
  const int edges = 1 + static_cast<int>(rng.next() % max_edges);
  for (int k = 0; k < edges; ++k) {
    Hyperedge e;
    const int mu = 1 + static_cast<int>(rng.next() % max_mu);
    for (int j = 0; j < mu; ++j)
      e.sources.push_back(1 + static_cast<int>(rng.next() % H.n));
    e.target = 1 + static_cast<int>(rng.next() % H.n);
    H.edges.push_back(e);
  }
  return {H, d};
}

}  // namespace svv::testutil
