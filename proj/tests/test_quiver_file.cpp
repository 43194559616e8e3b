#include <doctest.h>

#include <string>

#include "svv/analysis.hpp"
#include "svv/families.hpp"
#include "svv/quiver_file.hpp"

using namespace svv;

namespace {

const char* kCoupledForms = R"(# two coupled ternary forms
vertices: 3 3
edge: target=1 sources=1,2 class=1
edge: target=1 sources=1,2 class=1 perm=3,2,1
)";

}  // namespace

TEST_CASE("parse and analyze the coupled-forms example") {
  const HyperquiverFile f = parse_quiver_file(kCoupledForms);
  REQUIRE(f.H.n == 2);
  REQUIRE(f.H.edges.size() == 2);
  CHECK(f.d[1] == 3);
  CHECK(f.d[2] == 3);
  CHECK(f.P.class_of == std::vector<int>{1, 1});
  CHECK(f.P.perm_of[1] == std::vector<int>{3, 2, 1});

  const AnalysisResult res = analyze(f.H, f.d);
  CHECK_FALSE(res.empty);
  CHECK(*res.dimension == 0);
  CHECK(*res.degree == BigInt(15));
}

TEST_CASE("parse a one-vertex loop edge") {
  const HyperquiverFile f = parse_quiver_file(
      "vertices: 3\n"
      "edge: target=1 sources=1,1\n");
  const AnalysisResult res = analyze(f.H, f.d);
  CHECK(*res.dimension == 0);
  CHECK(*res.degree == eigen_count(3, 3));
}

TEST_CASE("edges without class labels become singleton classes") {
  const HyperquiverFile f = parse_quiver_file(
      "vertices: 2 2\n"
      "edge: target=2 sources=1\n"
      "edge: target=2 sources=1\n");
  CHECK(f.P.class_of == std::vector<int>{1, 2});
  const AnalysisResult res = analyze(f.H, f.d);
  CHECK(*res.dimension == 0);
  CHECK(*res.degree == BigInt(2));
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("missing vertices line") {
    try {
      parse_quiver_file("edge: target=1 sources=1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 1);
    }
  }
  SUBCASE("malformed edge line") {
    try {
      parse_quiver_file("vertices: 2\nedge: sources=1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
  }
  SUBCASE("non-integer dimension") {
    CHECK_THROWS_AS(parse_quiver_file("vertices: 2 x\n"), ParseError);
  }
  SUBCASE("duplicate vertices line") {
    CHECK_THROWS_AS(parse_quiver_file("vertices: 2\nvertices: 2\n"), ParseError);
  }
  SUBCASE("semantically invalid input still throws") {
    // Vertex id out of range.
    CHECK_THROWS(parse_quiver_file("vertices: 2\nedge: target=3 sources=1\n"));
  }
}

TEST_CASE("render round-trips through parse") {
  const char* sources[] = {kCoupledForms,
                           "vertices: 3\nedge: target=1 sources=1,1\n",
                           "vertices: 2 3 4\nedge: target=3 sources=1,2\n"
                           "edge: target=2 sources=1,3\n"};
  for (const char* src : sources) {
    const HyperquiverFile f = parse_quiver_file(src);
    const HyperquiverFile g = parse_quiver_file(render_quiver_file(f));
    CHECK(g.H.n == f.H.n);
    CHECK(g.d.dims == f.d.dims);
    REQUIRE(g.H.edges.size() == f.H.edges.size());
    for (std::size_t i = 0; i < f.H.edges.size(); ++i) {
      CHECK(g.H.edges[i].sources == f.H.edges[i].sources);
      CHECK(g.H.edges[i].target == f.H.edges[i].target);
    }
    CHECK(g.P.class_of == f.P.class_of);
    CHECK(g.P.perm_of == f.P.perm_of);
  }
}

TEST_CASE("render_analysis formats the analyze keys") {
  const BuiltFamily fam = build_jordan(3, 2);
  const std::string out = render_analysis(analyze(fam.H, fam.d));
  CHECK(out ==
        "empty: false\n"
        "dimension: 0\n"
        "degree: 3\n"
        "finitely-many: true\n"
        "guarantees: multiplicity-one non-isotropic nonzero-singular-values\n");
}
