#include "svv/quiver_file.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace svv {

namespace {

std::vector<int> parse_int_list(const std::string& text, int line) {
  std::vector<int> values;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    try {
      std::size_t pos = 0;
      values.push_back(std::stoi(token, &pos));
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + token + "'");
    }
  }
  if (values.empty()) throw ParseError(line, "expected a comma-separated integer list");
  return values;
}

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

HyperquiverFile parse_quiver_file(const std::string& text) {
  HyperquiverFile file;
  bool saw_vertices = false;

  struct RawEdge {
    Hyperedge edge;
    std::optional<int> class_label;
    std::optional<std::vector<int>> perm;
    int line;
  };
  std::vector<RawEdge> raw;

  std::istringstream is(text);
  std::string line_text;
  int line = 0;
  while (std::getline(is, line_text)) {
    ++line;
    const auto hash = line_text.find('#');
    if (hash != std::string::npos) line_text.erase(hash);
    line_text = strip(line_text);
    if (line_text.empty()) continue;

    if (line_text.rfind("vertices:", 0) == 0) {
      if (saw_vertices) throw ParseError(line, "duplicate 'vertices:' line");
      std::istringstream fields(line_text.substr(9));
      int dim;
      while (fields >> dim) file.d.dims.push_back(dim);
      if (!fields.eof()) throw ParseError(line, "malformed dimension list");
      if (file.d.dims.empty()) throw ParseError(line, "at least one dimension is required");
      saw_vertices = true;
      continue;
    }
    if (line_text.rfind("edge:", 0) == 0) {
      if (!saw_vertices) throw ParseError(line, "'vertices:' must come before any edge");
      RawEdge re;
      re.line = line;
      bool saw_target = false, saw_sources = false;
      std::istringstream fields(line_text.substr(5));
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
          throw ParseError(line, "expected key=value, got '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "target") {
          re.edge.target = parse_int_list(value, line).at(0);
          saw_target = true;
        } else if (key == "sources") {
          re.edge.sources = parse_int_list(value, line);
          saw_sources = true;
        } else if (key == "class") {
          re.class_label = parse_int_list(value, line).at(0);
        } else if (key == "perm") {
          re.perm = parse_int_list(value, line);
        } else {
          throw ParseError(line, "unknown field '" + key + "'");
        }
      }
      if (!saw_target || !saw_sources)
        throw ParseError(line, "edge needs both target= and sources=");
      raw.push_back(std::move(re));
      continue;
    }
    throw ParseError(line, "expected 'vertices:' or 'edge:'");
  }
  if (!saw_vertices) throw ParseError(line + 1, "missing 'vertices:' line");

  file.H.n = file.d.size();
  for (const RawEdge& re : raw) file.H.edges.push_back(re.edge);

  // Class labels map to contiguous ids in order of first appearance; the
  // first edge of each class is its representative.
  std::map<int, int> label_to_class;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    int class_id;
    if (raw[k].class_label) {
      auto [it, inserted] =
          label_to_class.try_emplace(*raw[k].class_label, file.P.class_count() + 1);
      class_id = it->second;
      if (inserted) file.P.representative.push_back(static_cast<int>(k));
    } else {
      class_id = file.P.class_count() + 1;
      file.P.representative.push_back(static_cast<int>(k));
    }
    file.P.class_of.push_back(class_id);
    std::vector<int> perm;
    if (raw[k].perm) {
      perm = *raw[k].perm;
    } else {
      perm.resize(raw[k].edge.m());
      std::iota(perm.begin(), perm.end(), 1);
    }
    file.P.perm_of.push_back(std::move(perm));
  }

  if (auto err = validate_hyperquiver(file.H, file.d))
    throw std::runtime_error("invalid hyperquiver: " + *err);
  if (auto err = validate_partition(file.H, file.P))
    throw std::runtime_error("invalid partition: " + *err);
  return file;
}

std::string render_quiver_file(const HyperquiverFile& file) {
  std::ostringstream os;
  os << "vertices:";
  for (int d : file.d.dims) os << " " << d;
  os << "\n";
  for (std::size_t k = 0; k < file.H.edges.size(); ++k) {
    const Hyperedge& e = file.H.edges[k];
    os << "edge: target=" << e.target << " sources=";
    for (std::size_t j = 0; j < e.sources.size(); ++j)
      os << (j > 0 ? "," : "") << e.sources[j];
    os << " class=" << file.P.class_of[k] << " perm=";
    for (std::size_t j = 0; j < file.P.perm_of[k].size(); ++j)
      os << (j > 0 ? "," : "") << file.P.perm_of[k][j];
    os << "\n";
  }
  return os.str();
}

std::string render_analysis(const AnalysisResult& res) {
  std::ostringstream os;
  os << "empty: " << (res.empty ? "true" : "false") << "\n";
  if (res.empty) {
    os << "reason: "
       << (*res.reason == EmptyReason::degree_zero ? "degree_zero"
                                                   : "negative_expected_dimension")
       << "\n";
    return os.str();
  }
  os << "dimension: " << *res.dimension << "\n";
  os << "degree: " << res.degree->str() << "\n";
  os << "finitely-many: " << (res.finitely_many ? "true" : "false") << "\n";
  if (res.finitely_many)
    os << "guarantees: multiplicity-one non-isotropic nonzero-singular-values\n";
  return os.str();
}

}  // namespace svv
