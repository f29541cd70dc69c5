#include "ipgp/gp_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ipgp {

GPParams validate_params(int n, int k) {
  if (n < 3) {
    throw std::invalid_argument("require n >= 3 (got n=" + std::to_string(n) + ")");
  }
  if (k < 1) {
    throw std::invalid_argument("require k >= 1 (got k=" + std::to_string(k) + ")");
  }
  if (2 * k >= n) {
    throw std::invalid_argument("require k < n/2 (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
  return GPParams{n, k};
}

bool Graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (vertex_count > 64) throw std::invalid_argument("adjacency masks require <= 64 vertices");
  std::vector<std::uint64_t> adj(vertex_count, 0);
  for (const auto& [a, b] : edges) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  }
  return adj;
}

Graph build_gp(const GPParams& params) {
  const int n = params.n;
  const int k = params.k;
  validate_params(n, k);

  Graph g;
  g.vertex_count = 2 * n;
  g.edges.reserve(3 * n);
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    g.edges.emplace_back(a, b);
  };
  for (int i = 0; i < n; ++i) {
    add(i, (i + 1) % n);          // outer cycle
    add(n + i, n + (i + k) % n);  // inner chord
    add(i, n + i);                // spoke
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.vertex_count << " " << g.edges.size() << "\n";
  for (const auto& [a, b] : g.edges) os << "e " << a << " " << b << "\n";
  return os.str();
}

}  // namespace ipgp
