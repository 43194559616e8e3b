#include "svv/equations.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "svv/splitmix64.hpp"

namespace svv {

namespace {

long flat_index(const std::vector<int>& shape, const std::vector<int>& idx) {
  long flat = 0;
  for (std::size_t m = 0; m < shape.size(); ++m) flat = flat * shape[m] + idx[m];
  return flat;
}

bool next_index(const std::vector<int>& shape, std::vector<int>& idx) {
  for (std::size_t m = shape.size(); m-- > 0;) {
    if (++idx[m] < shape[m]) return true;
    idx[m] = 0;
  }
  return false;
}

std::vector<int> class_tensor_shape(const Hyperquiver& H, const DimensionVector& d, int rep_edge) {
  const Hyperedge& e = H.edges[rep_edge];
  std::vector<int> shape;
  shape.push_back(d[e.target]);
  for (int s : e.sources) shape.push_back(d[s]);
  return shape;
}

}  // namespace

std::int64_t DenseTensor::at(const std::vector<int>& idx) const {
  return entries[flat_index(shape, idx)];
}

TensorAssignment random_assignment(const Hyperquiver& H, const EdgePartition& P,
                                   const DimensionVector& d, std::uint64_t seed, int range) {
  if (range < 1) throw std::invalid_argument("coefficient range must be positive");
  SplitMix64 rng(seed);
  TensorAssignment A;
  for (int r = 1; r <= P.class_count(); ++r) {
    DenseTensor T;
    T.shape = class_tensor_shape(H, d, P.representative[r - 1]);
    const long size = std::accumulate(T.shape.begin(), T.shape.end(), 1L, std::multiplies<>());
    T.entries.resize(size);
    for (long i = 0; i < size; ++i) T.entries[i] = rng.next_entry(range);
    A.class_tensors.push_back(std::move(T));
  }
  return A;
}

DenseTensor edge_tensor(const Hyperquiver& H, const EdgePartition& P, const TensorAssignment& A,
                        int edge_index) {
  const Hyperedge& e = H.edges[edge_index];
  const int r = P.class_of[edge_index];
  const DenseTensor& C = A.class_tensors[r - 1];
  const std::vector<int>& sigma = P.perm_of[edge_index];
  const int m = e.m();

  if (edge_index == P.representative[r - 1]) return C;

  // Entry (i_m, i_1..i_mu) of the edge tensor reads the class tensor at the
  // tuple positions dictated by sigma: the index at class position sigma(j)
  // is the edge index at position j. Modes store the tuple with the target
  // (position m) first.
  // Tuple position m (the target) lives in mode 0; position j < m in mode j.
  auto class_mode_of_pos = [m](int pos) { return pos == m ? 0 : pos; };
  auto edge_pos_of_mode = [m](int mode) { return mode == 0 ? m : mode; };

  DenseTensor E;
  E.shape.reserve(m);
  for (int mode = 0; mode < m; ++mode) {
    const int j = edge_pos_of_mode(mode);
    E.shape.push_back(C.shape[class_mode_of_pos(sigma[j - 1])]);
  }
  E.entries.resize(C.entries.size());

  std::vector<int> idx(m, 0);
  std::vector<int> cidx(m);
  do {
    for (int mode = 0; mode < m; ++mode) {
      const int j = edge_pos_of_mode(mode);  // tuple position of this mode
      cidx[class_mode_of_pos(sigma[j - 1])] = idx[mode];
    }
    E.entries[flat_index(E.shape, idx)] = C.entries[flat_index(C.shape, cidx)];
  } while (next_index(E.shape, idx));
  return E;
}

void SparsePoly::add_term(const std::vector<int>& exps, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::complex<double> SparsePoly::evaluate(const std::vector<std::complex<double>>& point) const {
  std::complex<double> total = 0;
  for (const auto& [exps, coeff] : terms) {
    std::complex<double> term = static_cast<double>(coeff);
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (int k = 0; k < exps[v]; ++k) term *= point[v];
    total += term;
  }
  return total;
}

int SparsePoly::block_degree(int first_var, int var_count) const {
  int deg = 0;
  for (const auto& [exps, coeff] : terms) {
    int d = 0;
    for (int v = first_var; v < first_var + var_count; ++v) d += exps[v];
    deg = std::max(deg, d);
  }
  return deg;
}

std::string PolynomialSystem::variable_name(int flat_index) const {
  for (int i = 1; i <= d.size(); ++i) {
    const int offset = var_offset[i - 1];
    if (flat_index < offset + d[i]) {
      std::ostringstream os;
      os << "x" << i << "_" << flat_index - offset + 1;
      return os.str();
    }
  }
  throw std::out_of_range("variable index out of range");
}

std::string PolynomialSystem::to_text() const {
  std::ostringstream os;
  os << header;
  os << "vars";
  for (int v = 0; v < total_vars; ++v) os << " " << variable_name(v);
  os << "\n";
  for (const SparsePoly& p : polynomials) {
    if (p.terms.empty()) {
      os << "0\n";
      continue;
    }
    for (const auto& [exps, coeff] : p.terms) {
      BigInt c = coeff;
      if (c < 0) {
        os << "-";
        c = -c;
      } else {
        os << "+";
      }
      os << c.str();
      for (int v = 0; v < total_vars; ++v) {
        if (exps[v] == 0) continue;
        os << "*" << variable_name(v);
        if (exps[v] > 1) os << "^" << exps[v];
      }
    }
    os << "\n";
  }
  return os.str();
}

PolynomialSystem emit_system(const Hyperquiver& H, const EdgePartition& P,
                             const DimensionVector& d, const TensorAssignment& A,
                             std::uint64_t seed, int range, const EmitOptions& options) {
  PolynomialSystem sys;
  sys.d = d;
  sys.var_offset.resize(H.n);
  for (int i = 1; i <= H.n; ++i) {
    sys.var_offset[i - 1] = sys.total_vars;
    sys.total_vars += d[i];
  }

  std::ostringstream header;
  header << "# hyperquiver n=" << H.n << " dims=";
  for (int i = 1; i <= H.n; ++i) header << (i > 1 ? "," : "") << d[i];
  header << "\n";
  for (std::size_t k = 0; k < H.edges.size(); ++k) {
    const Hyperedge& e = H.edges[k];
    header << "# edge " << k + 1 << ": target=" << e.target << " sources=";
    for (std::size_t j = 0; j < e.sources.size(); ++j)
      header << (j > 0 ? "," : "") << e.sources[j];
    header << " class=" << P.class_of[k] << " perm=";
    for (std::size_t j = 0; j < P.perm_of[k].size(); ++j)
      header << (j > 0 ? "," : "") << P.perm_of[k][j];
    header << "\n";
  }
  header << "# seed=" << seed << " range=" << range
         << " patch=" << (options.patch ? "true" : "false") << "\n";
  for (std::size_t r = 0; r < A.class_tensors.size(); ++r) {
    const DenseTensor& T = A.class_tensors[r];
    header << "# class " << r + 1 << " tensor shape=";
    for (std::size_t m = 0; m < T.shape.size(); ++m)
      header << (m > 0 ? "," : "") << T.shape[m];
    header << " entries=";
    for (long i = 0; i < T.size(); ++i) header << (i > 0 ? "," : "") << T.entries[i];
    header << "\n";
  }
  sys.header = header.str();

  for (std::size_t k = 0; k < H.edges.size(); ++k) {
    const Hyperedge& e = H.edges[k];
    const DenseTensor E = edge_tensor(H, P, A, static_cast<int>(k));
    const int dt = d[e.target];
    const int mu = e.mu();

    // f_a = contraction of E against the source variable vectors.
    std::vector<SparsePoly> f(dt);
    std::vector<int> source_shape(E.shape.begin() + 1, E.shape.end());
    std::vector<int> sidx(mu, 0);
    std::vector<int> full_idx(mu + 1);
    std::vector<int> exps(sys.total_vars, 0);
    do {
      std::fill(exps.begin(), exps.end(), 0);
      for (int j = 0; j < mu; ++j) ++exps[sys.var_offset[e.sources[j] - 1] + sidx[j]];
      for (int j = 0; j < mu; ++j) full_idx[j + 1] = sidx[j];
      for (int a = 0; a < dt; ++a) {
        full_idx[0] = a;
        f[a].add_term(exps, E.at(full_idx));
      }
    } while (next_index(source_shape, sidx));

    const int toff = sys.var_offset[e.target - 1];
    for (int a = 0; a < dt; ++a) {
      for (int b = a + 1; b < dt; ++b) {
        SparsePoly minor;
        for (const auto& [m_exps, c] : f[a].terms) {
          std::vector<int> shifted = m_exps;
          ++shifted[toff + b];
          minor.add_term(shifted, c);
        }
        for (const auto& [m_exps, c] : f[b].terms) {
          std::vector<int> shifted = m_exps;
          ++shifted[toff + a];
          minor.add_term(shifted, -c);
        }
        sys.polynomials.push_back(std::move(minor));
      }
    }
  }

  if (options.patch) {
    // Replay the stream past the tensor entries; the chart coefficients are
    // the draws that follow.
    SplitMix64 rng(seed);
    for (const DenseTensor& T : A.class_tensors)
      for (long i = 0; i < T.size(); ++i) rng.next_entry(range);
    for (int i = 1; i <= H.n; ++i) {
      SparsePoly chart;
      std::vector<int> exps(sys.total_vars, 0);
      for (int j = 0; j < d[i]; ++j) {
        ++exps[sys.var_offset[i - 1] + j];
        chart.add_term(exps, rng.next_entry(range));
        --exps[sys.var_offset[i - 1] + j];
      }
      chart.add_term(exps, -1);
      sys.polynomials.push_back(std::move(chart));
    }
  }

  return sys;
}

}  // namespace svv
