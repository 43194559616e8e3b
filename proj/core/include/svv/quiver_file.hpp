#pragma once

#include <string>

#include "svv/analysis.hpp"
#include "svv/hyperquiver.hpp"

namespace svv {

struct HyperquiverFile {
  Hyperquiver H;
  DimensionVector d;
  EdgePartition P;
};

/// Thrown with a 1-based line number on malformed input.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Line-oriented grammar. '#' starts a comment; blank lines are ignored.
///   vertices: INT+                     (d_1..d_n, exactly once, first)
///   edge: target=INT sources=INT(,INT)* [class=INT] [perm=INT(,INT)*]
/// Omitted class: a fresh singleton class. Omitted perm: identity.
/// Semantic validity (including partition checks) is verified after parsing.
HyperquiverFile parse_quiver_file(const std::string& text);

/// Inverse of parse_quiver_file up to comments: parse(render(x)) == x.
std::string render_quiver_file(const HyperquiverFile& file);

/// The `analyze` command's key:value rendering of a result.
std::string render_analysis(const AnalysisResult& res);

}  // namespace svv
