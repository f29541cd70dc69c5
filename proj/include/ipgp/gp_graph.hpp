#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ipgp {

/// Parameters (n, k) of a generalized Petersen graph GP(n, k).
/// Valid iff n >= 3 and 1 <= k < n/2 (strict, so k = n/2 is rejected).
struct GPParams {
  int n = 0;
  int k = 0;
};

// Throws std::invalid_argument with a distinct diagnostic per violated
// constraint.
GPParams validate_params(int n, int k);

/// Undirected simple graph as a canonical edge list: every edge is stored as
/// (a, b) with a < b and the list is sorted lexicographically.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int a, int b) const;
  int degree(int v) const;
  // Bitmask of neighbors per vertex; requires vertex_count <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;
};

// GP(n, k) with vertex indexing u_i -> i and v_i -> n + i for 0 <= i < n.
// Outer edges u_i u_{i+1}, inner chords v_i v_{i+k}, spokes u_i v_i, indices
// mod n.
Graph build_gp(const GPParams& params);

// Edge-list text format: "p <vertex_count> <edge_count>" followed by one
// "e <a> <b>" line per edge, 0-indexed.
std::string graph_to_text(const Graph& g);

}  // namespace ipgp
