#pragma once

#include <utility>
#include <vector>

#include "ipgp/gp_graph.hpp"
#include "ipgp/int_poly.hpp"

namespace ipgp {

struct NumericRoot {
  double re = 0.0;
  double im = 0.0;
  // |p(root)| / max(1, |lead(p)| * max(1,|root|)^deg), evaluated in the
  // working precision at the full-precision root estimate.
  double residual = 0.0;
};

struct RootFindOptions {
  long precision_bits = 128;       // starting fractional precision
  long max_precision_bits = 1024;  // ceiling for automatic doubling
  int max_sweeps = 200;            // Aberth sweeps per precision level
  double residual_target = 1e-10;  // scaled residual every root must meet
};

struct RootReport {
  int degree = 0;
  std::vector<NumericRoot> roots;  // sorted by (re, im); size == degree
  double max_residual = 0.0;
  long exact_real_count = 0;  // with multiplicity, from Sturm machinery
  bool is_real_rooted = false;  // exact_real_count == degree, never a threshold
  bool converged = true;        // every root met residual_target
  bool pairing_ok = true;       // non-real roots matched into conjugate pairs
  std::vector<int> failed_indices;  // indices into roots with residual > target
};

// Locates all complex roots of p (degree >= 1).  Zero roots are split off
// exactly, the rest is decomposed into squarefree factors whose simple roots
// are found by Aberth-Ehrlich simultaneous iteration with Newton polishing;
// precision doubles automatically until every residual meets the target or
// the ceiling is reached (then converged=false and failed_indices is filled).
// Real-rootedness is decided by exact integer Sturm counts, independent of
// the numeric roots.
RootReport find_roots(const IntPoly& p, const RootFindOptions& opts = {});

// Computes Ind(GP(n,k),x) via the transfer matrix, then returns the exact
// real-rootedness verdict together with the numeric root report.
std::pair<bool, RootReport> classify_parity_instance(const GPParams& params,
                                                     const RootFindOptions& opts = {},
                                                     int threads = 1);

}  // namespace ipgp
