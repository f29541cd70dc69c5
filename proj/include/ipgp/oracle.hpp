#pragma once

#include <cstdint>
#include <vector>

#include "ipgp/gp_graph.hpp"
#include "ipgp/int_poly.hpp"

namespace ipgp {

// Largest graph the brute-force census accepts. 2^30 subsets with pruning is
// still cheap; the cap also guarantees every count fits in 64 bits.
inline constexpr int kOracleVertexCap = 30;

/// Exact counts of independent sets by cardinality: counts[s] is the number
/// of independent sets of size s.
struct Census {
  std::vector<std::uint64_t> counts;
};

// Brute-force census by subset enumeration with adjacency-mask pruning.
// Throws std::invalid_argument if the graph exceeds vertex_cap.
Census census(const Graph& g, int vertex_cap = kOracleVertexCap);

IntPoly census_to_poly(const Census& c);

// Second, independent oracle path: the deletion recurrence
//   Ind(G) = Ind(G - v) + x * Ind(G - N[v])
// memoized on the remaining-vertex bitmask. Shares no logic with census().
IntPoly independence_poly_by_recurrence(const Graph& g, int vertex_cap = kOracleVertexCap);

}  // namespace ipgp
