#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ipgp/int_poly.hpp"
#include "ipgp/poly_matrix.hpp"

using ipgp::IntPoly;
using ipgp::PolyMatrix;

TEST_CASE("canonical form trims trailing zeros") {
  IntPoly p(std::vector<mpz_class>{1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p == IntPoly{1, 2});
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{}.lead() == 0);
}

TEST_CASE("coeff beyond stored range is zero") {
  IntPoly p{3, 0, 5};
  CHECK(p.coeff(0) == 3);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == 5);
  CHECK(p.coeff(17) == 0);
  CHECK(p.lead() == 5);
}

TEST_CASE("arithmetic") {
  IntPoly a{1, 1};   // 1 + x
  IntPoly b{-1, 1};  // -1 + x
  CHECK(a + b == IntPoly{0, 2});
  CHECK(a - a == IntPoly{});
  CHECK(a * b == IntPoly{-1, 0, 1});
  CHECK(-a == IntPoly{-1, -1});
  CHECK(a * IntPoly{} == IntPoly{});
  // (1+x)^2 = 1 + 2x + x^2
  CHECK(a * a == IntPoly{1, 2, 1});
}

TEST_CASE("multiplication handles large coefficients exactly") {
  mpz_class big = 1;
  for (int i = 0; i < 40; ++i) big *= 1000003;  // ~800 bits
  IntPoly p(std::vector<mpz_class>{big, big});
  IntPoly sq = p * p;
  CHECK(sq.coeff(0) == big * big);
  CHECK(sq.coeff(1) == 2 * big * big);
  CHECK(sq.coeff(2) == big * big);
}

TEST_CASE("constant and monomial constructors") {
  CHECK(IntPoly::constant(7) == IntPoly{7});
  CHECK(IntPoly::constant(0).is_zero());
  CHECK(IntPoly::monomial(3) == IntPoly{0, 0, 0, 1});
  CHECK(IntPoly::monomial(0, 4) == IntPoly{4});
  CHECK(IntPoly::monomial(2, 0).is_zero());
  CHECK_THROWS_AS(IntPoly::monomial(-1), std::invalid_argument);
}

TEST_CASE("derivative and evaluation") {
  IntPoly p{1, 6, 6};  // 1 + 6x + 6x^2
  CHECK(p.derivative() == IntPoly{6, 12});
  CHECK(IntPoly{5}.derivative().is_zero());
  CHECK(p.eval(0) == 1);
  CHECK(p.eval(1) == 13);
  CHECK(p.eval(-2) == 13);
  CHECK(IntPoly{}.eval(3) == 0);
}

TEST_CASE("order at zero and shift") {
  IntPoly p{0, 0, 3, 1};  // 3x^2 + x^3
  CHECK(p.order_at_zero() == 2);
  CHECK(p.shifted_down(2) == IntPoly{3, 1});
  CHECK(IntPoly{1, 1}.order_at_zero() == 0);
  CHECK(IntPoly{}.order_at_zero() == 0);
}

TEST_CASE("to_string") {
  CHECK(IntPoly{1, 6, 6}.to_string() == "1 + 6x + 6x^2");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly{0, 1}.to_string() == "x");
  CHECK(IntPoly{-1, 0, 2}.to_string() == "-1 + 2x^2");
}

TEST_CASE("matrix product and trace") {
  PolyMatrix m(2);
  m.at(0, 0) = IntPoly{0, 1};  // x
  m.at(0, 1) = IntPoly{1};
  m.at(1, 0) = IntPoly{1};
  m.at(1, 1) = IntPoly{};
  PolyMatrix sq = mat_mul(m, m);
  CHECK(sq.at(0, 0) == IntPoly{1, 0, 1});  // x^2 + 1
  CHECK(sq.at(0, 1) == IntPoly{0, 1});
  CHECK(sq.at(1, 1) == IntPoly{1});
  CHECK(sq.trace() == IntPoly{2, 0, 1});
  CHECK(PolyMatrix::identity(3).trace() == IntPoly{3});
}

TEST_CASE("matrix power trace via binary exponentiation") {
  PolyMatrix m(2);
  m.at(0, 0) = IntPoly{0, 1};
  m.at(0, 1) = IntPoly{1};
  m.at(1, 0) = IntPoly{1};
  m.at(1, 1) = IntPoly{};
  // Tr(m^1) = x, Tr(m^2) = x^2 + 2, Tr(m^4) = Tr((m^2)^2)
  CHECK(mat_pow_trace(m, 1) == IntPoly{0, 1});
  CHECK(mat_pow_trace(m, 2) == IntPoly{2, 0, 1});
  PolyMatrix sq = mat_mul(m, m);
  CHECK(mat_pow_trace(m, 4) == mat_pow_trace(sq, 2));
  // odd exponent against naive repeated multiplication
  PolyMatrix naive = m;
  for (int i = 1; i < 13; ++i) naive = mat_mul(naive, m);
  CHECK(mat_pow_trace(m, 13) == naive.trace());
  CHECK_THROWS_AS(mat_pow_trace(m, 0), std::invalid_argument);
}

TEST_CASE("matrix multiply is thread-count invariant") {
  PolyMatrix m(5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) m.at(r, c) = IntPoly{r - c, r * c, 1};
  CHECK(mat_mul(m, m, 1) == mat_mul(m, m, 4));
  CHECK(mat_pow_trace(m, 9, 1) == mat_pow_trace(m, 9, 3));
}
