#include "svv/hyperquiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace svv {

std::optional<std::string> validate_hyperquiver(const Hyperquiver& H, const DimensionVector& d) {
  if (H.n < 1) return "vertex count must be at least 1";
  if (d.size() != H.n) {
    std::ostringstream os;
    os << "dimension vector has " << d.size() << " entries but the hyperquiver has " << H.n
       << " vertices";
    return os.str();
  }
  for (int i = 1; i <= H.n; ++i) {
    if (d[i] < 1) {
      std::ostringstream os;
      os << "dimension d_" << i << " = " << d[i] << " is not positive";
      return os.str();
    }
  }
  for (std::size_t k = 0; k < H.edges.size(); ++k) {
    const Hyperedge& e = H.edges[k];
    if (e.mu() < 1) {
      std::ostringstream os;
      os << "edge " << k + 1 << " has index mu = 0; at least one source is required";
      return os.str();
    }
    for (int v : e.vertex_tuple()) {
      if (v < 1 || v > H.n) {
        std::ostringstream os;
        os << "edge " << k + 1 << " refers to vertex " << v << ", outside [1.." << H.n << "]";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

EdgePartition singleton_partition(const Hyperquiver& H) {
  EdgePartition P;
  const int E = static_cast<int>(H.edges.size());
  P.class_of.resize(E);
  P.perm_of.resize(E);
  P.representative.resize(E);
  for (int k = 0; k < E; ++k) {
    P.class_of[k] = k + 1;
    P.representative[k] = k;
    P.perm_of[k].resize(H.edges[k].m());
    std::iota(P.perm_of[k].begin(), P.perm_of[k].end(), 1);
  }
  return P;
}

std::optional<std::string> validate_partition(const Hyperquiver& H, const EdgePartition& P) {
  const int E = static_cast<int>(H.edges.size());
  if (static_cast<int>(P.class_of.size()) != E || static_cast<int>(P.perm_of.size()) != E)
    return "partition does not cover every edge";
  const int M = P.class_count();
  for (int k = 0; k < E; ++k) {
    if (P.class_of[k] < 1 || P.class_of[k] > M) {
      std::ostringstream os;
      os << "edge " << k + 1 << " assigned to class " << P.class_of[k] << ", outside [1.." << M
         << "]";
      return os.str();
    }
  }
  for (int r = 1; r <= M; ++r) {
    int rep = P.representative[r - 1];
    if (rep < 0 || rep >= E || P.class_of[rep] != r) {
      std::ostringstream os;
      os << "class " << r << " has an invalid representative";
      return os.str();
    }
  }

  for (int r = 1; r <= M; ++r) {
    const int rep = P.representative[r - 1];
    const Hyperedge& er = H.edges[rep];
    const std::vector<int> rep_tuple = er.vertex_tuple();
    const int m = er.m();
    std::set<int> target_positions;
    for (int k = 0; k < E; ++k) {
      if (P.class_of[k] != r) continue;
      const Hyperedge& e = H.edges[k];
      if (e.mu() != er.mu()) {
        std::ostringstream os;
        os << "edge " << k + 1 << " has index " << e.mu() << " but class " << r
           << " has index " << er.mu();
        return os.str();
      }
      const std::vector<int>& perm = P.perm_of[k];
      if (static_cast<int>(perm.size()) != m) {
        std::ostringstream os;
        os << "edge " << k + 1 << " permutation has length " << perm.size() << ", expected " << m;
        return os.str();
      }
      std::vector<bool> seen(m, false);
      for (int p : perm) {
        if (p < 1 || p > m || seen[p - 1]) {
          std::ostringstream os;
          os << "edge " << k + 1 << " permutation is not a permutation of [1.." << m << "]";
          return os.str();
        }
        seen[p - 1] = true;
      }
      if (k == rep) {
        for (int j = 1; j <= m; ++j) {
          if (perm[j - 1] != j) {
            std::ostringstream os;
            os << "representative of class " << r << " must carry the identity permutation";
            return os.str();
          }
        }
      }
      const std::vector<int> tuple = e.vertex_tuple();
      for (int j = 1; j <= m; ++j) {
        if (rep_tuple[perm[j - 1] - 1] != tuple[j - 1]) {
          std::ostringstream os;
          os << "edge " << k + 1 << " tuple does not match class " << r
             << " representative under its permutation at position " << j;
          return os.str();
        }
      }
      if (!target_positions.insert(perm[m - 1]).second) {
        std::ostringstream os;
        os << "class " << r << " has two edges with target position " << perm[m - 1];
        return os.str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace svv
