#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "svv/bigint.hpp"
#include "svv/hyperquiver.hpp"

namespace svv {

/// Dense integer tensor. Modes are stored target-first: mode 0 indexes the
/// target space, mode j >= 1 the j-th source space of the owning edge.
struct DenseTensor {
  std::vector<int> shape;
  std::vector<std::int64_t> entries;  // row-major in `shape`

  long size() const { return static_cast<long>(entries.size()); }
  std::int64_t at(const std::vector<int>& idx) const;
};

/// One tensor per partition class, attached to the class representative's
/// mode order. Edges recover their own tensor through their permutation.
struct TensorAssignment {
  std::vector<DenseTensor> class_tensors;  // class id - 1 -> tensor
};

/// Deterministic assignment from the splitmix64 stream: classes in id
/// order, entries row-major, values uniform in [-range, range].
TensorAssignment random_assignment(const Hyperquiver& H, const EdgePartition& P,
                                   const DimensionVector& d, std::uint64_t seed, int range);

/// The tensor carried by edge e (0-based index): the class tensor with its
/// modes relocated by the edge's permutation. The representative edge gets
/// the class tensor unchanged.
DenseTensor edge_tensor(const Hyperquiver& H, const EdgePartition& P, const TensorAssignment& A,
                        int edge_index);

/// Multihomogeneous polynomial in the variables x_{i,j}, i a vertex and
/// j in [1..d_i]. Monomials are exponent vectors over the flat variable
/// list, compared colexicographically.
struct ColexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct SparsePoly {
  std::map<std::vector<int>, BigInt, ColexLess> terms;  // exponents -> coefficient

  void add_term(const std::vector<int>& exps, const BigInt& c);
  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;
  /// Degree in the variable block of one vertex.
  int block_degree(int first_var, int var_count) const;
};

struct PolynomialSystem {
  DimensionVector d;
  std::vector<int> var_offset;       // vertex - 1 -> index of x_{i,1} in the flat list
  int total_vars = 0;
  std::vector<SparsePoly> polynomials;
  std::string header;                // '#' comment lines recording provenance

  std::string variable_name(int flat_index) const;
  std::string to_text() const;
};

struct EmitOptions {
  bool patch = false;  // append one random affine-chart equation per vertex
};

/// The 2x2-minor system of the representation (H, P, d, A): for each edge
/// and each row pair a < b, the polynomial f_a x_{t,b} - f_b x_{t,a} where
/// f is the contraction of the edge tensor against the source variables.
/// Patch coefficients, when requested, consume the same PRNG stream right
/// after the tensors, so they must be drawn with the seed that produced A.
PolynomialSystem emit_system(const Hyperquiver& H, const EdgePartition& P,
                             const DimensionVector& d, const TensorAssignment& A,
                             std::uint64_t seed, int range, const EmitOptions& options);

}  // namespace svv
