#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ipgp/gp_graph.hpp"
#include "ipgp/int_poly.hpp"
#include "ipgp/oracle.hpp"

using namespace ipgp;

namespace {
Graph path_graph(int n) {
  Graph g;
  g.vertex_count = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}
}  // namespace

TEST_CASE("census of tiny graphs by hand") {
  Graph empty;
  empty.vertex_count = 3;  // no edges: all 8 subsets independent
  Census c = census(empty);
  REQUIRE(c.counts.size() == 4);
  CHECK(c.counts[0] == 1);
  CHECK(c.counts[1] == 3);
  CHECK(c.counts[2] == 3);
  CHECK(c.counts[3] == 1);

  // single edge: {} {a} {b}
  Graph edge;
  edge.vertex_count = 2;
  edge.edges = {{0, 1}};
  CHECK(census_to_poly(census(edge)) == IntPoly{1, 2});

  // path on 3 vertices: {} {0} {1} {2} {0,2}
  CHECK(census_to_poly(census(path_graph(3))) == IntPoly{1, 3, 1});

  // triangle: no independent pair
  Graph tri;
  tri.vertex_count = 3;
  tri.edges = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(census_to_poly(census(tri)) == IntPoly{1, 3});
}

TEST_CASE("path graph census matches the Fibonacci recurrence") {
  // Ind(P_n) satisfies p_n = p_{n-1} + x * p_{n-2}
  IntPoly prev{1};     // P_0 (empty graph)
  IntPoly cur{1, 1};   // P_1
  for (int n = 2; n <= 12; ++n) {
    IntPoly next = cur + IntPoly{0, 1} * prev;
    prev = cur;
    cur = next;
    CHECK(census_to_poly(census(path_graph(n))) == cur);
  }
}

TEST_CASE("Petersen census") {
  Census c = census(build_gp({5, 2}));
  CHECK(census_to_poly(c) == IntPoly{1, 10, 30, 30, 5});
}

TEST_CASE("census total equals a direct power-set identity on small graphs") {
  // sum of counts = Ind(G, 1) = number of independent sets
  Census c = census(build_gp({4, 1}));
  IntPoly p = census_to_poly(c);
  mpz_class total = 0;
  for (const auto& v : c.counts) total += mpz_class(static_cast<unsigned long>(v));
  CHECK(p.eval(1) == total);
}

TEST_CASE("deletion recurrence agrees with census on every small GP") {
  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      Graph g = build_gp({n, k});
      CHECK(census_to_poly(census(g)) == independence_poly_by_recurrence(g));
    }
  }
}

TEST_CASE("deletion recurrence on non-GP graphs") {
  CHECK(independence_poly_by_recurrence(path_graph(6)) ==
        census_to_poly(census(path_graph(6))));
  Graph empty;
  empty.vertex_count = 4;
  CHECK(independence_poly_by_recurrence(empty) == IntPoly{1, 4, 6, 4, 1});
}

TEST_CASE("vertex cap is enforced") {
  Graph big;
  big.vertex_count = kOracleVertexCap + 1;
  CHECK_THROWS_AS(census(big), std::invalid_argument);
  CHECK_THROWS_AS(independence_poly_by_recurrence(big), std::invalid_argument);
  CHECK_NOTHROW(census(build_gp({15, 2})));  // exactly 30 vertices
}
