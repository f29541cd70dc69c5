#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ipgp/gp_graph.hpp"
#include "ipgp/int_poly.hpp"
#include "ipgp/roots.hpp"

namespace ipgp {

struct SequenceDiagnostics {
  bool is_log_concave = true;  // i_s^2 >= i_{s-1} * i_{s+1}, exact integers
  bool is_unimodal = true;     // single-peak scan
  bool newton_ok = true;       // strengthened, binomial-normalized inequality
  // Smallest coefficient index at which any failing check first fails.
  std::optional<int> first_violation_index;
};

// Exact diagnostics for a coefficient sequence with nonnegative entries and
// leading 1 at index 0.  Newton's inequality is checked cross-multiplied:
//   i_s^2 * s * (d - s)  >=  i_{s-1} * i_{s+1} * (s + 1) * (d - s + 1)
// where d is the degree, so no rational arithmetic is needed.
SequenceDiagnostics diagnose_sequence(const IntPoly& p);

struct RootGeometry {
  double max_im = 0.0;
  double min_re = 0.0;
  double max_re = 0.0;
  std::optional<double> center_re;  // mean re over non-real roots; absent if all real
};

RootGeometry root_geometry(const RootReport& report);

struct ConjectureRow {
  int n = 0;
  int k = 0;
  int degree = 0;
  long exact_real_count = 0;
  bool is_real_rooted = false;
  bool parity_prediction = false;  // k even
  bool agrees = false;             // is_real_rooted == parity_prediction
  double max_im = 0.0;
  double min_re = 0.0;
  double max_re = 0.0;
  bool failed = false;  // computation error; see error, numeric fields unset
  std::string error;
};

// Optional per-row artifacts retained for downstream checks and plotting.
struct SweepDetail {
  IntPoly poly;
  RootReport report;
};

struct SweepOptions {
  RootFindOptions root_options;
  int threads = 1;            // <= 0 means hardware concurrency
  bool keep_details = false;  // retain polynomial + root report per row
  // Polynomial source; defaults to the transfer-matrix computation.  The CLI
  // installs a cache-backed provider here.
  std::function<IntPoly(const GPParams&)> provider;
};

struct SweepResult {
  std::vector<ConjectureRow> rows;        // (n,k)-lexicographic
  std::vector<GPParams> skipped;          // invalid pairs, reported not computed
  std::vector<SweepDetail> details;       // parallel to rows iff keep_details
  bool counterexample_found = false;      // some computed row has agrees == false
  std::optional<GPParams> first_counterexample;
};

// Evaluates the parity prediction (real-rooted iff k even) over the grid
// n in [n_min, n_max] x k_set.  Pairs failing the GP validity constraints are
// skipped; per-pair computation errors become rows with failed = true.  Rows
// are produced in deterministic (n,k) order regardless of thread count.
SweepResult sweep_conjecture(int n_min, int n_max, const std::vector<int>& k_set,
                             const SweepOptions& opts = {});

}  // namespace ipgp
