#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ipgp/gp_graph.hpp"
#include "ipgp/int_poly.hpp"
#include "ipgp/oracle.hpp"
#include "ipgp/transfer.hpp"

using namespace ipgp;

TEST_CASE("state enumeration covers all bit patterns in order") {
  auto states = enumerate_states(3);
  REQUIRE(states.size() == 16);
  for (size_t i = 0; i < states.size(); ++i) CHECK(states[i].bits == i);
  CHECK(enumerate_states(1).size() == 4);
}

TEST_CASE("k=1 transition table recounted from first principles") {
  // Independent recount: for k=1 a state is (u, v). A transition a -> b is
  // allowed iff no edge of the strip is doubly occupied: outer u-u, spoke
  // u-v on the new column, chord v-v (adjacent columns when k=1).
  int allowed = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const bool au = a & 1, av = a & 2;
      const bool bu = b & 1, bv = b & 2;
      const bool ok = !(au && bu) && !(bu && bv) && !(av && bv);
      if (ok) ++allowed;
      CHECK(transition_allowed({static_cast<uint32_t>(a)}, {static_cast<uint32_t>(b)}, 1) == ok);
    }
  }
  CHECK(allowed == 8);

  TransferMatrix t = build_transfer_matrix(1);
  int nonzero = 0;
  for (int r = 0; r < t.matrix.dim(); ++r)
    for (int c = 0; c < t.matrix.dim(); ++c)
      if (!t.matrix.at(r, c).is_zero()) ++nonzero;
  CHECK(nonzero == 8);
}

TEST_CASE("entries are monomials weighted by the new column only") {
  for (int k = 1; k <= 3; ++k) {
    TransferMatrix t = build_transfer_matrix(k);
    for (int r = 0; r < t.matrix.dim(); ++r) {
      for (int c = 0; c < t.matrix.dim(); ++c) {
        const IntPoly& e = t.matrix.at(r, c);
        if (e.is_zero()) continue;
        const TransferState b = t.states[static_cast<size_t>(c)];
        const int weight = (b.outer() ? 1 : 0) + (b.inner() ? 1 : 0);
        CHECK(e == IntPoly::monomial(weight));
      }
    }
  }
}

TEST_CASE("triangle prism closed form") {
  // Tr(T_1^3) must equal Ind(GP(3,1),x) = 1 + 6x + 6x^2
  TransferMatrix t = build_transfer_matrix(1);
  CHECK(mat_pow_trace(t.matrix, 3) == IntPoly{1, 6, 6});
}

TEST_CASE("transfer equals both oracles on every small instance") {
  for (int n = 3; n <= 11; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const IntPoly via_trace = independence_polynomial({n, k});
      const Graph g = build_gp({n, k});
      CHECK(via_trace == census_to_poly(census(g)));
      CHECK(via_trace == independence_poly_by_recurrence(g));
    }
  }
}

TEST_CASE("trace is invariant under any state reordering") {
  std::mt19937 rng(12345);
  for (int k = 1; k <= 3; ++k) {
    const int dim = 1 << (k + 1);
    std::vector<uint32_t> order(static_cast<size_t>(dim));
    std::iota(order.begin(), order.end(), 0u);
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      PolyMatrix permuted = build_transfer_matrix_with_order(k, order);
      const TransferMatrix canonical = build_transfer_matrix(k);
      for (long n = std::max(3, k + 1); n <= k + 6; ++n)
        CHECK(mat_pow_trace(permuted, n) == mat_pow_trace(canonical.matrix, n));
    }
  }
}

TEST_CASE("window constraint rejects n <= k") {
  CHECK_THROWS_AS(independence_polynomial({3, 3}), std::invalid_argument);   // invalid anyway
  CHECK_THROWS_AS(independence_polynomial({4, 2}), std::invalid_argument);   // k = n/2
  CHECK_NOTHROW(independence_polynomial({7, 3}));
}

TEST_CASE("step cap") {
  CHECK_THROWS_AS(build_transfer_matrix(kMaxTransferK + 1), std::invalid_argument);
  CHECK_THROWS_AS(build_transfer_matrix(0), std::invalid_argument);
  CHECK_NOTHROW(build_transfer_matrix(kMaxTransferK));
}

TEST_CASE("k=5 and k=6 still agree with the oracle where the census is feasible") {
  // 2n <= 30 keeps the census cheap; k up to 6 exercises the wide matrices
  for (auto [n, k] : std::vector<std::pair<int, int>>{{11, 5}, {12, 5}, {13, 6}, {14, 6}}) {
    const Graph g = build_gp({n, k});
    CHECK(independence_polynomial({n, k}) == census_to_poly(census(g)));
  }
}

TEST_CASE("polynomial shape invariants") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{9, 2}, {12, 3}, {15, 4}, {25, 2}}) {
    const IntPoly p = independence_polynomial({n, k});
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2 * n);  // one independent set per vertex
    for (int i = 0; i <= p.degree(); ++i) CHECK(sgn(p.coeff(i)) > 0);
  }
}
