#include "ipgp/transfer.hpp"

#include <stdexcept>

namespace ipgp {

namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("transfer matrix requires k >= 1");
  if (k > kMaxTransferK) {
    throw std::invalid_argument("k=" + std::to_string(k) + " exceeds the supported cap k <= " +
                                std::to_string(kMaxTransferK));
  }
}

}  // namespace

std::vector<TransferState> enumerate_states(int k) {
  check_k(k);
  const std::uint32_t count = std::uint32_t{1} << (k + 1);
  std::vector<TransferState> states(count);
  for (std::uint32_t s = 0; s < count; ++s) states[s].bits = s;
  return states;
}

bool transition_allowed(TransferState a, TransferState b, int k) {
  for (int i = 1; i <= k - 1; ++i) {
    if (b.bit(1 + i) != a.bit(i)) return false;  // shift consistency
  }
  if (b.bit(0) && a.bit(0)) return false;  // outer edge u_j u_{j-1}
  if (b.bit(0) && b.bit(1)) return false;  // spoke u_j v_j
  if (b.bit(1) && a.bit(k)) return false;  // chord v_j v_{j-k}
  return true;
}

TransferMatrix build_transfer_matrix(int k) {
  TransferMatrix t{k, PolyMatrix(1 << (k + 1)), enumerate_states(k)};
  const int dim = t.matrix.dim();
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (transition_allowed(t.states[a], t.states[b], k)) {
        const int weight = int(t.states[b].outer()) + int(t.states[b].inner());
        t.matrix.at(a, b) = IntPoly::monomial(weight);
      }
    }
  }
  return t;
}

PolyMatrix build_transfer_matrix_with_order(int k, const std::vector<std::uint32_t>& state_order) {
  check_k(k);
  const size_t dim = size_t{1} << (k + 1);
  if (state_order.size() != dim) {
    throw std::invalid_argument("state_order must list every state exactly once");
  }
  PolyMatrix m(static_cast<int>(dim));
  for (size_t a = 0; a < dim; ++a) {
    for (size_t b = 0; b < dim; ++b) {
      TransferState sa{state_order[a]};
      TransferState sb{state_order[b]};
      if (sa.bits >= dim || sb.bits >= dim) {
        throw std::invalid_argument("state_order entry out of range");
      }
      if (transition_allowed(sa, sb, k)) {
        m.at(static_cast<int>(a), static_cast<int>(b)) =
            IntPoly::monomial(int(sb.outer()) + int(sb.inner()));
      }
    }
  }
  return m;
}

IntPoly independence_polynomial(const GPParams& params, int threads) {
  validate_params(params.n, params.k);
  if (params.n <= params.k) {
    throw std::invalid_argument("require n > k for the windowed transfer encoding");
  }
  TransferMatrix t = build_transfer_matrix(params.k);
  return mat_pow_trace(t.matrix, params.n, threads);
}

}  // namespace ipgp
