#pragma once

#include <cstdint>
#include <vector>

#include "ipgp/gp_graph.hpp"
#include "ipgp/int_poly.hpp"
#include "ipgp/poly_matrix.hpp"

namespace ipgp {

// Soft cap on the step size: dim 2^(k+1) = 128 with exact polynomial entries
// is still tractable. Raise if larger k is ever needed.
inline constexpr int kMaxTransferK = 6;

/// Occupancy state of the sliding window at column j of GP(n, k).
///
/// Bit layout (bit 0 is the least significant bit of `bits`):
///   bit 0     -> u_j
///   bit 1     -> v_j
///   bit 1 + i -> v_{j-i}   for 1 <= i <= k-1   (occupancy history)
///
/// A state is k+1 bits; the integer value of `bits` under this layout is the
/// state's index in enumerate_states().
struct TransferState {
  std::uint32_t bits = 0;

  bool bit(int pos) const { return (bits >> pos) & 1u; }
  bool outer() const { return bit(0); }  // u_j
  bool inner() const { return bit(1); }  // v_j
};

// All 2^(k+1) states in ascending order of `bits`. Requires k >= 1.
std::vector<TransferState> enumerate_states(int k);

// Whether state b may follow state a when sliding the window one column:
//   shift:  b's history bits equal a's (v_j, v_{j-1}, ..., v_{j-k+2});
//   outer:  u_j and u_{j-1} not both occupied;
//   spoke:  u_j and v_j not both occupied (checked on b);
//   chord:  v_j and v_{j-k} not both occupied (a's last history bit).
bool transition_allowed(TransferState a, TransferState b, int k);

struct TransferMatrix {
  int k = 0;
  PolyMatrix matrix;
  std::vector<TransferState> states;  // row/column index -> state
};

// Entry (A, B) is x^(new vertices of B) = x^(u_j + v_j) when B may follow A,
// else 0. Every nonzero entry is a monomial 1, x, or x^2: the history bits of
// B describe vertices that were already weighted when first introduced, so
// only u_j and v_j count here.
TransferMatrix build_transfer_matrix(int k);

// Same matrix with rows/columns arranged by state_order (a permutation of all
// 2^(k+1) state bit patterns). Conjugation by a permutation, so any trace of
// a power is unchanged.
PolyMatrix build_transfer_matrix_with_order(int k, const std::vector<std::uint32_t>& state_order);

// Ind(GP(n, k), x) as the trace of the n-th power of the transfer matrix.
// Rejects n <= k (the window would wrap onto itself); valid GPParams already
// guarantee n >= 2k+1.
IntPoly independence_polynomial(const GPParams& params, int threads = 1);

}  // namespace ipgp
