#pragma once

#include <vector>

#include "svv/analysis.hpp"
#include "svv/bigint.hpp"
#include "svv/hyperquiver.hpp"

namespace svv {

/// A named hyperquiver together with its canonical dimension vector and
/// edge partition. `generic_partition` is false when the family's canonical
/// representation is not generic (the cycle family, n >= 2): the engine's
/// prediction is still exposed and happens to agree with the true count.
struct BuiltFamily {
  Hyperquiver H;
  DimensionVector d;
  EdgePartition P;
  bool generic_partition = true;
};

/// One vertex of dimension d; one edge with m-1 loop sources. Eigenvectors
/// of a tensor in (C^d)^{tensor m}.
BuiltFamily build_jordan(int m, int d);

/// n vertices; edge e_i contracts every mode except i. Singular vectors of
/// a tensor in C^{d_1} x ... x C^{d_n}. Requires n >= 2. All edges share
/// one class; the permutations are anchored to e_1.
BuiltFamily build_fo(const std::vector<int>& dims);

/// Two vertices; two parallel edges with m-1 source copies of vertex 1 and
/// target 2, in separate classes. The generalised tensor eigenproblem.
BuiltFamily build_kronecker(int m, int d1, int d2);

/// n vertices of dimension d; edge i maps vertex i to vertex i+1 (mod n)
/// with m-1 source copies. Period-n orbits. For n >= 2 the canonical
/// same-tensor representation is not generic.
BuiltFamily build_cycle(int n, int m, int d);

/// Single edge with sources 1..n-1 and target n, all distinct. Requires
/// n >= 2.
BuiltFamily build_star(const std::vector<int>& dims);

/// Two vertices of dimensions (k, d); one edge with sources (1, 2) and
/// target 1. Homology classes fixed by a parameterised dynamical system.
BuiltFamily build_homology(int k, int d);

/// ((m-1)^d - 1)/(m - 2); d for m = 2 (the removable singularity).
BigInt eigen_count(int m, int d);

/// d * (m-1)^{d-1}.
BigInt kronecker_count(int m, int d);

/// ((m-1)^{nd} - 1)/((m-1)^n - 1) = sum_{k=1..d} (m-1)^{n(d-k)}.
/// Requires m >= 3.
BigInt periodic_count(int n, int m, int d);

/// Degree of the single-hyperedge variety: the double multinomial sum over
/// k and compositions of d_n - k. Requires n >= 2.
BigInt single_edge_degree(const std::vector<int>& dims);

/// sum_{j=1..k} sum_{i=0..k-j} C(k-j,i) C(d-1,k-i-j) = C(k+d-1, d).
BigInt homology_count(int k, int d);

/// Singular vector count of a generic tensor, through the engine.
BigInt fo_count(const std::vector<int>& dims);

}  // namespace svv
