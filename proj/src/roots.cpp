#include "ipgp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ipgp/bigfloat.hpp"
#include "ipgp/sturm.hpp"
#include "ipgp/transfer.hpp"

namespace ipgp {
namespace {

std::vector<BigFloat> coeffs_to_bigfloat(const IntPoly& f, mpfr_prec_t prec) {
  std::vector<BigFloat> out;
  out.reserve(static_cast<size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) out.emplace_back(f.coeff(i), prec);
  return out;
}

std::vector<BigFloat> derivative_coeffs(const std::vector<BigFloat>& a, mpfr_prec_t prec) {
  std::vector<BigFloat> out;
  if (a.size() <= 1) return out;
  out.reserve(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out.push_back(BigFloat(static_cast<long>(i), prec) * a[i]);
  return out;
}

BigComplex eval_horner(const std::vector<BigFloat>& a, const BigComplex& z) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(z.precision(), a.empty() ? MPFR_PREC_MIN : a.back().precision());
  BigComplex acc(prec);
  for (size_t i = a.size(); i-- > 0;) {
    acc = acc * z;
    acc.re = acc.re + a[i];
  }
  return acc;
}

// sum_i |a_i| * t^i for t >= 0; scales the evaluation-noise stopping test.
BigFloat eval_abs_sum(const std::vector<BigFloat>& a, const BigFloat& t) {
  BigFloat acc(t.precision());
  for (size_t i = a.size(); i-- > 0;) acc = acc * t + abs(a[i]);
  return acc;
}

bool is_finite(const BigComplex& z) {
  return mpfr_number_p(z.re.get()) != 0 && mpfr_number_p(z.im.get()) != 0;
}

// Aberth-Ehrlich simultaneous iteration on a squarefree factor with f(0) != 0.
// Deterministic: fixed initial circle, sequential Gauss-Seidel sweeps.
std::vector<BigComplex> aberth_roots(const IntPoly& f, mpfr_prec_t prec, int max_sweeps) {
  const int d = f.degree();
  const std::vector<BigFloat> a = coeffs_to_bigfloat(f, prec);
  const std::vector<BigFloat> da = derivative_coeffs(a, prec);

  BigFloat radius = rootn(abs(a[0] / a[static_cast<size_t>(d)]), static_cast<unsigned long>(d));
  if (radius.is_zero()) radius = BigFloat(1.0, prec);
  const BigFloat two_pi = BigFloat(2.0, prec) * const_pi(prec);
  std::vector<BigComplex> z;
  z.reserve(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    // fractional angle offset breaks conjugation symmetry of the start set
    BigFloat theta = two_pi * BigFloat((j + 0.376) / d, prec);
    z.emplace_back(radius * cos(theta), radius * sin(theta));
  }

  const BigFloat stop_eps = BigFloat::pow2(-(static_cast<long>(prec) - 8), prec);
  const BigFloat nudge = BigFloat::pow2(-(static_cast<long>(prec) / 3), prec);
  const BigComplex one{BigFloat(1.0, prec), BigFloat(0.0, prec)};

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all_settled = true;
    for (int j = 0; j < d; ++j) {
      const BigComplex pz = eval_horner(a, z[j]);
      const BigFloat noise_floor = stop_eps * eval_abs_sum(a, abs(z[j]));
      if (abs(pz) <= noise_floor) continue;
      all_settled = false;

      const BigComplex dpz = eval_horner(da, z[j]);
      if (dpz.is_zero()) {
        z[j].re = z[j].re + nudge;
        z[j].im = z[j].im + nudge;
        continue;
      }
      const BigComplex newton = pz / dpz;

      BigComplex repulsion(prec);
      bool collision = false;
      for (int i = 0; i < d; ++i) {
        if (i == j) continue;
        BigComplex diff = z[j] - z[i];
        if (diff.is_zero()) {
          collision = true;
          break;
        }
        repulsion = repulsion + one / diff;
      }
      if (collision) {
        z[j].re = z[j].re + nudge;
        z[j].im = z[j].im + nudge;
        continue;
      }

      const BigComplex denom = one - newton * repulsion;
      BigComplex step = denom.is_zero() ? newton : newton / denom;
      if (!is_finite(step)) {
        z[j].re = z[j].re + nudge;
        z[j].im = z[j].im + nudge;
        continue;
      }
      z[j] = z[j] - step;
    }
    if (all_settled) break;
  }

  // Newton polish: quadratic cleanup near the converged simple roots.
  for (int j = 0; j < d; ++j) {
    for (int t = 0; t < 2; ++t) {
      const BigComplex pz = eval_horner(a, z[j]);
      const BigComplex dpz = eval_horner(da, z[j]);
      if (dpz.is_zero()) break;
      const BigComplex step = pz / dpz;
      if (!is_finite(step)) break;
      z[j] = z[j] - step;
    }
  }
  return z;
}

int cmp_bf(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }

// Snap near-real estimates to the axis (cosmetic only; realness verdicts come
// from Sturm), then sort by (re, |im|, im) and merge adjacent conjugates.
bool pair_conjugates(std::vector<BigComplex>& roots, mpfr_prec_t prec, double pair_tol) {
  const BigFloat snap = BigFloat::pow2(-(static_cast<long>(prec) / 2), prec);
  const BigFloat one(1.0, prec);
  for (BigComplex& r : roots) {
    BigFloat scale = abs(r.re);
    if (scale < one) scale = one;
    if (abs(r.im) <= snap * scale) r.im = BigFloat(0.0, prec);
  }

  std::sort(roots.begin(), roots.end(), [](const BigComplex& x, const BigComplex& y) {
    int c = cmp_bf(x.re, y.re);
    if (c != 0) return c < 0;
    c = cmp_bf(abs(x.im), abs(y.im));
    if (c != 0) return c < 0;
    return cmp_bf(x.im, y.im) < 0;
  });

  std::vector<size_t> nonreal;
  for (size_t i = 0; i < roots.size(); ++i)
    if (!roots[i].im.is_zero()) nonreal.push_back(i);
  if (nonreal.size() % 2 != 0) return false;

  const BigFloat tol(pair_tol, prec);
  const BigFloat two(2.0, prec);
  bool ok = true;
  for (size_t t = 0; t + 1 < nonreal.size(); t += 2) {
    BigComplex& lo = roots[nonreal[t]];
    BigComplex& hi = roots[nonreal[t + 1]];
    BigFloat scale_re = abs(lo.re);
    if (scale_re < one) scale_re = one;
    BigFloat scale_im = abs(lo.im);
    if (scale_im < one) scale_im = one;
    if (abs(lo.re - hi.re) > tol * scale_re || abs(lo.im + hi.im) > tol * scale_im ||
        lo.im.sign() * hi.im.sign() >= 0) {
      ok = false;
      continue;
    }
    const BigFloat mid_re = (lo.re + hi.re) / two;
    const BigFloat mid_im = (hi.im - lo.im) / two;  // lo.im < 0 < hi.im after sort
    lo.re = mid_re;
    hi.re = mid_re;
    lo.im = -mid_im;
    hi.im = mid_im;
  }
  return ok;
}

long max_coeff_bits(const IntPoly& p) {
  size_t bits = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    if (sgn(p.coeff(i)) == 0) continue;
    bits = std::max(bits, mpz_sizeinbase(p.coeff(i).get_mpz_t(), 2));
  }
  return static_cast<long>(bits);
}

}  // namespace

RootReport find_roots(const IntPoly& p, const RootFindOptions& opts) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: polynomial degree must be >= 1");

  RootReport report;
  report.degree = p.degree();
  report.exact_real_count = count_real_roots(p);
  report.is_real_rooted = (report.exact_real_count == p.degree());

  const int zero_mult = p.order_at_zero();
  const IntPoly q = zero_mult > 0 ? p.shifted_down(zero_mult) : p;
  std::vector<std::pair<IntPoly, int>> factors;
  if (q.degree() >= 1) factors = squarefree_decomposition(q);

  const long headroom = max_coeff_bits(p) + 16;
  long base_bits = std::max<long>(opts.precision_bits, MPFR_PREC_MIN);

  for (;;) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(base_bits + headroom);
    report.roots.clear();
    report.failed_indices.clear();
    report.pairing_ok = true;
    report.max_residual = 0.0;

    for (int i = 0; i < zero_mult; ++i) report.roots.push_back({0.0, 0.0, 0.0});

    // residual scale: max(1, |lead(p)| * max(1,|r|)^deg)
    const std::vector<BigFloat> pc = coeffs_to_bigfloat(p, prec);
    const BigFloat abs_lead = abs(pc.back());
    const BigFloat one(1.0, prec);

    std::vector<double> residuals(static_cast<size_t>(zero_mult), 0.0);
    for (const auto& [factor, mult] : factors) {
      std::vector<BigComplex> z = aberth_roots(factor, prec, opts.max_sweeps);
      if (!pair_conjugates(z, prec, opts.residual_target)) report.pairing_ok = false;
      for (const BigComplex& r : z) {
        BigFloat zabs = abs(r);
        if (zabs < one) zabs = one;
        BigFloat scale = abs_lead;
        for (int e = 0; e < p.degree(); ++e) scale = scale * zabs;
        if (scale < one) scale = one;
        const double residual = (abs(eval_horner(pc, r)) / scale).to_double();
        for (int copy = 0; copy < mult; ++copy) {
          report.roots.push_back({r.re.to_double(), r.im.to_double(), residual});
          residuals.push_back(residual);
        }
      }
    }

    if (report.roots.size() != static_cast<size_t>(p.degree()))
      throw std::runtime_error("find_roots: factor degrees do not sum to the polynomial degree");

    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, r);
    report.max_residual = worst;
    report.converged = worst <= opts.residual_target;

    if (report.converged || base_bits >= opts.max_precision_bits) break;
    base_bits = std::min(base_bits * 2, opts.max_precision_bits);
  }

  std::vector<size_t> order(report.roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    const NumericRoot& a = report.roots[x];
    const NumericRoot& b = report.roots[y];
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  std::vector<NumericRoot> sorted;
  sorted.reserve(order.size());
  for (size_t i : order) sorted.push_back(report.roots[i]);
  report.roots = std::move(sorted);

  for (size_t i = 0; i < report.roots.size(); ++i)
    if (report.roots[i].residual > opts.residual_target)
      report.failed_indices.push_back(static_cast<int>(i));

  return report;
}

std::pair<bool, RootReport> classify_parity_instance(const GPParams& params,
                                                     const RootFindOptions& opts, int threads) {
  const IntPoly poly = independence_polynomial(params, threads);
  RootReport report = find_roots(poly, opts);
  return {report.is_real_rooted, report};
}

}  // namespace ipgp
