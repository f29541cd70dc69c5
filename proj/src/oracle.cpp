#include "ipgp/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace ipgp {

namespace {

void check_cap(const Graph& g, int vertex_cap) {
  if (g.vertex_count > vertex_cap) {
    throw std::invalid_argument("graph exceeds oracle vertex cap (" +
                                std::to_string(g.vertex_count) + " > " +
                                std::to_string(vertex_cap) + " vertices)");
  }
}

}  // namespace

Census census(const Graph& g, int vertex_cap) {
  check_cap(g, vertex_cap);
  const auto adj = g.adjacency_masks();
  std::vector<std::uint64_t> counts(g.vertex_count + 1, 0);

  // Every independent set corresponds to exactly one leaf of this branching:
  // vertices are decided in ascending index order, and taking a vertex
  // removes its closed neighborhood from the undecided set.
  auto rec = [&](auto&& self, std::uint64_t undecided, int size) -> void {
    if (undecided == 0) {
      ++counts[size];
      return;
    }
    const int v = std::countr_zero(undecided);
    const std::uint64_t bit = std::uint64_t{1} << v;
    self(self, undecided & ~bit, size);
    self(self, undecided & ~(bit | adj[v]), size + 1);
  };
  const std::uint64_t full =
      g.vertex_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count) - 1;
  rec(rec, full, 0);

  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return Census{std::move(counts)};
}

IntPoly census_to_poly(const Census& c) {
  std::vector<mpz_class> coeffs(c.counts.size());
  for (size_t i = 0; i < c.counts.size(); ++i) {
    coeffs[i] = mpz_class(static_cast<unsigned long>(c.counts[i]));
  }
  return IntPoly(std::move(coeffs));
}

IntPoly independence_poly_by_recurrence(const Graph& g, int vertex_cap) {
  check_cap(g, vertex_cap);
  const auto adj = g.adjacency_masks();
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> memo;

  auto rec = [&](auto&& self, std::uint64_t remaining) -> const std::vector<std::uint64_t>& {
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second;
    std::vector<std::uint64_t> result;
    if (remaining == 0) {
      result = {1};
    } else {
      const int v = std::countr_zero(remaining);
      const std::uint64_t bit = std::uint64_t{1} << v;
      const auto without = self(self, remaining & ~bit);
      const auto with = self(self, remaining & ~(bit | adj[v]));  // copy: memo may rehash
      result.assign(std::max(without.size(), with.size() + 1), 0);
      for (size_t i = 0; i < without.size(); ++i) result[i] += without[i];
      for (size_t i = 0; i < with.size(); ++i) result[i + 1] += with[i];
    }
    return memo.emplace(remaining, std::move(result)).first->second;
  };

  const std::uint64_t full =
      g.vertex_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count) - 1;
  const auto& counts = rec(rec, full);
  return census_to_poly(Census{counts});
}

}  // namespace ipgp
