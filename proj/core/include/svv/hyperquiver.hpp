#pragma once

#include <optional>
#include <string>
#include <vector>

namespace svv {

/// Vector-space dimensions per vertex, d_1..d_n. Vertex ids are 1-based
/// throughout the library.
struct DimensionVector {
  std::vector<int> dims;

  int size() const { return static_cast<int>(dims.size()); }
  int operator[](int vertex) const { return dims[vertex - 1]; }  // 1-based
};

/// Directed hyperedge: an ordered tuple of source vertices and one target.
/// The vertex tuple v(e) is sources followed by the target; its length is
/// m = mu + 1 where mu = |sources| is the index of the edge.
struct Hyperedge {
  std::vector<int> sources;
  int target = 0;

  int mu() const { return static_cast<int>(sources.size()); }
  int m() const { return mu() + 1; }

  /// v(e): sources followed by target.
  std::vector<int> vertex_tuple() const {
    std::vector<int> v = sources;
    v.push_back(target);
    return v;
  }

  bool operator==(const Hyperedge&) const = default;
};

struct Hyperquiver {
  int n = 0;  // vertex count
  std::vector<Hyperedge> edges;

  bool operator==(const Hyperquiver&) const = default;
};

/// Grouping of edges into classes that share a tensor up to mode
/// permutation. Permutations are anchored to a per-class representative:
/// v(rep)[perm[j]] = v(e)[j]. All indices 1-based except edge indices,
/// which are 0-based positions into Hyperquiver::edges.
struct EdgePartition {
  std::vector<int> class_of;               // edge index -> class id in [1..M]
  std::vector<std::vector<int>> perm_of;   // edge index -> permutation of [1..m]
  std::vector<int> representative;         // class id - 1 -> edge index

  int class_count() const { return static_cast<int>(representative.size()); }
};

/// nullopt on success, a 1-based diagnostic message otherwise.
std::optional<std::string> validate_hyperquiver(const Hyperquiver& H, const DimensionVector& d);

/// Every edge alone in its class with the identity permutation. Always a
/// valid partition.
EdgePartition singleton_partition(const Hyperquiver& H);

std::optional<std::string> validate_partition(const Hyperquiver& H, const EdgePartition& P);

}  // namespace svv
