#include "ipgp/sturm.hpp"

#include <stdexcept>

namespace ipgp {

namespace {

int sgn(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }

// (positive constant) * rem(a, b) over Q[x], computed entirely in Z[x].
// Each elimination step multiplies the running remainder by lc(b), so the
// accumulated factor is lc(b)^steps; the final sign flip restores the sign of
// the true remainder.
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero polynomial");
  if (a.is_zero() || a.degree() < b.degree()) return a;

  const std::vector<mpz_class>& bc = b.coeffs();
  const mpz_class& d = b.lead();
  std::vector<mpz_class> r = a.coeffs();
  int steps = 0;

  auto top = [&]() {
    while (!r.empty() && r.back() == 0) r.pop_back();
    return static_cast<int>(r.size()) - 1;
  };

  for (int dr = top(); dr >= b.degree(); dr = top()) {
    const mpz_class lr = r[dr];
    const int shift = dr - b.degree();
    for (int i = 0; i < dr; ++i) {
      r[i] *= d;
      if (i >= shift) r[i] -= lr * bc[i - shift];
    }
    r[dr] = 0;
    ++steps;
  }

  IntPoly out{std::move(r)};
  if (sgn(d) < 0 && (steps % 2) == 1) out = -out;
  return out;
}

IntPoly with_positive_lead(IntPoly p) {
  if (sgn(p.lead()) < 0) return -p;
  return p;
}

}  // namespace

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const mpz_class& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  const mpz_class c = content(p);
  if (c == 0 || c == 1) return p;
  std::vector<mpz_class> out(p.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return with_positive_lead(std::move(b));
  if (b.is_zero()) return with_positive_lead(std::move(a));
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(signed_prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return with_positive_lead(std::move(a));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) throw std::runtime_error("inexact polynomial division");

  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(a.degree() - b.degree() + 1);
  const std::vector<mpz_class>& bc = b.coeffs();

  for (int dr = a.degree(); dr >= b.degree();) {
    if (rem[dr] == 0) {
      --dr;
      continue;
    }
    if (!mpz_divisible_p(rem[dr].get_mpz_t(), b.lead().get_mpz_t())) {
      throw std::runtime_error("inexact polynomial division");
    }
    const int shift = dr - b.degree();
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rem[dr].get_mpz_t(), b.lead().get_mpz_t());
    quot[shift] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[shift + i] -= q * bc[i];
    --dr;
  }
  for (const mpz_class& c : rem) {
    if (c != 0) throw std::runtime_error("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  IntPoly f = with_positive_lead(primitive_part(p));
  if (f.degree() < 1) return IntPoly::constant(1);
  IntPoly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) return f;
  return with_positive_lead(divide_exact(f, g));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("squarefree decomposition requires degree >= 1");
  IntPoly f = with_positive_lead(primitive_part(p));
  IntPoly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) return {{f, 1}};

  std::vector<std::pair<IntPoly, int>> out;
  IntPoly c = divide_exact(f, g);
  IntPoly d = divide_exact(f.derivative(), g) - c.derivative();
  for (int mult = 1; c.degree() > 0; ++mult) {
    if (mult > p.degree()) throw std::runtime_error("squarefree decomposition failed to terminate");
    IntPoly a = poly_gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, mult);
    c = divide_exact(c, a);
    d = divide_exact(d, a) - c.derivative();
  }
  return out;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  chain.push_back(primitive_part(p));
  if (p.degree() < 1) return chain;
  chain.push_back(primitive_part(p.derivative()));
  while (true) {
    const IntPoly& prev = chain[chain.size() - 2];
    const IntPoly& last = chain.back();
    if (last.is_zero()) break;
    IntPoly r = signed_prem(prev, last);
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sign_variations_at_neg_inf(const std::vector<IntPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const IntPoly& q : chain) {
    int s = sgn(q.lead());
    if (q.degree() % 2 != 0 && q.degree() > 0) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

int sign_variations_at_pos_inf(const std::vector<IntPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const IntPoly& q : chain) signs.push_back(sgn(q.lead()));
  return variations(signs);
}

int sign_variations_at_zero(const std::vector<IntPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const IntPoly& q : chain) signs.push_back(sgn(q.coeff(0)));
  return variations(signs);
}

int count_distinct_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real-root count of zero polynomial");
  if (p.degree() < 1) return 0;
  const auto chain = sturm_chain(p);
  return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

int count_real_roots(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("real-root count requires degree >= 1");
  // Distinct roots of the squarefree part, then recurse on gcd(p, p') whose
  // roots are exactly the multiple roots of p with multiplicity one lower.
  IntPoly f = primitive_part(p);
  int total = 0;
  while (f.degree() >= 1) {
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
      total += count_distinct_real_roots(f);
      break;
    }
    total += count_distinct_real_roots(divide_exact(with_positive_lead(f), g));
    f = std::move(g);
  }
  return total;
}

int count_distinct_real_roots_nonneg(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real-root count of zero polynomial");
  const int m = p.order_at_zero();
  const IntPoly q = p.shifted_down(m);  // q(0) != 0
  int total = m > 0 ? 1 : 0;
  if (q.degree() >= 1) {
    const auto chain = sturm_chain(q);
    total += sign_variations_at_zero(chain) - sign_variations_at_pos_inf(chain);
  }
  return total;
}

}  // namespace ipgp
