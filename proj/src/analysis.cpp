#include "ipgp/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "ipgp/transfer.hpp"

namespace ipgp {

SequenceDiagnostics diagnose_sequence(const IntPoly& p) {
  if (p.degree() < 0) throw std::invalid_argument("diagnose_sequence: zero polynomial");
  for (int i = 0; i <= p.degree(); ++i)
    if (sgn(p.coeff(i)) < 0)
      throw std::invalid_argument("diagnose_sequence: coefficients must be nonnegative");
  if (p.coeff(0) != 1)
    throw std::invalid_argument("diagnose_sequence: constant coefficient must be 1");

  SequenceDiagnostics diag;
  const int d = p.degree();
  int first_log_concave = -1;
  int first_newton = -1;
  int first_unimodal = -1;

  for (int s = 1; s <= d - 1; ++s) {
    const mpz_class sq = p.coeff(s) * p.coeff(s);
    const mpz_class outer = p.coeff(s - 1) * p.coeff(s + 1);
    if (diag.is_log_concave && sq < outer) {
      diag.is_log_concave = false;
      first_log_concave = s;
    }
    // strengthened Newton inequality, cross-multiplied to stay in integers
    const mpz_class lhs = sq * s * (d - s);
    const mpz_class rhs = outer * (s + 1) * (d - s + 1);
    if (diag.newton_ok && lhs < rhs) {
      diag.newton_ok = false;
      first_newton = s;
    }
  }

  bool descended = false;
  for (int s = 1; s <= d; ++s) {
    const int c = cmp(p.coeff(s), p.coeff(s - 1));
    if (c < 0) descended = true;
    if (c > 0 && descended) {
      diag.is_unimodal = false;
      first_unimodal = s;
      break;
    }
  }

  int first = -1;
  for (int idx : {first_log_concave, first_newton, first_unimodal})
    if (idx >= 0 && (first < 0 || idx < first)) first = idx;
  if (first >= 0) diag.first_violation_index = first;
  return diag;
}

RootGeometry root_geometry(const RootReport& report) {
  if (report.roots.empty()) throw std::invalid_argument("root_geometry: empty root set");
  RootGeometry geo;
  geo.max_im = report.roots.front().im;
  geo.min_re = report.roots.front().re;
  geo.max_re = report.roots.front().re;
  double nonreal_sum = 0.0;
  long nonreal_count = 0;
  for (const NumericRoot& r : report.roots) {
    geo.max_im = std::max(geo.max_im, r.im);
    geo.min_re = std::min(geo.min_re, r.re);
    geo.max_re = std::max(geo.max_re, r.re);
    if (r.im != 0.0) {
      nonreal_sum += r.re;
      ++nonreal_count;
    }
  }
  if (nonreal_count > 0) geo.center_re = nonreal_sum / static_cast<double>(nonreal_count);
  return geo;
}

namespace {

bool params_valid(const GPParams& params) {
  try {
    validate_params(params.n, params.k);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

SweepResult sweep_conjecture(int n_min, int n_max, const std::vector<int>& k_set,
                             const SweepOptions& opts) {
  std::vector<int> ks = k_set;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  SweepResult result;
  std::vector<GPParams> pairs;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k : ks) {
      const GPParams params{n, k};
      if (params_valid(params))
        pairs.push_back(params);
      else
        result.skipped.push_back(params);
    }
  }

  result.rows.resize(pairs.size());
  if (opts.keep_details) result.details.resize(pairs.size());

  const auto provider = opts.provider
                            ? opts.provider
                            : [](const GPParams& p) { return independence_polynomial(p, 1); };

  auto compute_row = [&](size_t idx) {
    const GPParams params = pairs[idx];
    ConjectureRow& row = result.rows[idx];
    row.n = params.n;
    row.k = params.k;
    row.parity_prediction = (params.k % 2 == 0);
    try {
      IntPoly poly = provider(params);
      RootReport report = find_roots(poly, opts.root_options);
      const RootGeometry geo = root_geometry(report);
      row.degree = report.degree;
      row.exact_real_count = report.exact_real_count;
      row.is_real_rooted = report.is_real_rooted;
      row.agrees = (row.is_real_rooted == row.parity_prediction);
      row.max_im = geo.max_im;
      row.min_re = geo.min_re;
      row.max_re = geo.max_re;
      if (opts.keep_details) result.details[idx] = SweepDetail{std::move(poly), std::move(report)};
    } catch (const std::exception& e) {
      row.failed = true;
      row.error = e.what();
    }
  };

  int threads = opts.threads;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(pairs.size())));

  if (threads <= 1 || pairs.size() <= 1) {
    for (size_t i = 0; i < pairs.size(); ++i) compute_row(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const size_t idx = next.fetch_add(1);
          if (idx >= pairs.size()) return;
          compute_row(idx);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (const ConjectureRow& row : result.rows) {
    if (!row.failed && !row.agrees) {
      result.counterexample_found = true;
      result.first_counterexample = GPParams{row.n, row.k};
      break;
    }
  }
  return result;
}

}  // namespace ipgp
