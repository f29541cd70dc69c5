#pragma once

#include <utility>
#include <vector>

#include "ipgp/int_poly.hpp"

namespace ipgp {

// gcd of all coefficients, >= 0 (0 for the zero polynomial).
mpz_class content(const IntPoly& p);

// p divided by its content; the sign of the leading coefficient is preserved.
IntPoly primitive_part(const IntPoly& p);

// Primitive gcd with positive leading coefficient (primitive pseudo-remainder
// sequence). poly_gcd(0, 0) is 0.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Exact quotient a / b in Z[x]; throws std::runtime_error if b does not
// divide a exactly.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'): same roots, every multiplicity one. Primitive, positive
// leading coefficient. Requires a nonzero p.
IntPoly squarefree_part(const IntPoly& p);

// Yun decomposition: pairs (f, m) with p = c * prod f^m for an integer
// constant c, the f pairwise coprime, squarefree, primitive with positive
// leading coefficient, and deg f >= 1. Requires deg p >= 1.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Sturm chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i), each element
// scaled by a positive constant (content removed). Sign-variation differences
// between two points count the distinct real roots strictly between them.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

// Number of sign changes (zeros skipped) of the chain at -infinity,
// +infinity, and at x = 0.
int sign_variations_at_neg_inf(const std::vector<IntPoly>& chain);
int sign_variations_at_pos_inf(const std::vector<IntPoly>& chain);
int sign_variations_at_zero(const std::vector<IntPoly>& chain);

// Distinct real roots over (-inf, inf). Multiple roots count once.
int count_distinct_real_roots(const IntPoly& p);

// Real roots counted with multiplicity, exactly. Requires degree >= 1.
int count_real_roots(const IntPoly& p);

// Distinct real roots in [0, +inf). A root at x = 0 is included.
int count_distinct_real_roots_nonneg(const IntPoly& p);

}  // namespace ipgp
