#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ipgp/int_poly.hpp"
#include "ipgp/roots.hpp"
#include "ipgp/transfer.hpp"

using namespace ipgp;

TEST_CASE("x^2 + 1 has the two imaginary units") {
  RootReport rep = find_roots(IntPoly{1, 0, 1});
  REQUIRE(rep.degree == 2);
  REQUIRE(rep.roots.size() == 2);
  CHECK(rep.exact_real_count == 0);
  CHECK_FALSE(rep.is_real_rooted);
  CHECK(rep.converged);
  CHECK(rep.pairing_ok);
  CHECK(rep.roots[0].re == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(rep.roots[0].im == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(rep.roots[1].im == doctest::Approx(1.0).epsilon(1e-14));
  // exact conjugate symmetry after pairing
  CHECK(rep.roots[0].im == -rep.roots[1].im);
  CHECK(rep.roots[0].re == rep.roots[1].re);
}

TEST_CASE("quadratic with known closed-form roots") {
  // 1 + 6x + 6x^2, roots (-3 +- sqrt(3)) / 6
  RootReport rep = find_roots(IntPoly{1, 6, 6});
  REQUIRE(rep.roots.size() == 2);
  CHECK(rep.exact_real_count == 2);
  CHECK(rep.is_real_rooted);
  CHECK(rep.roots[0].re == doctest::Approx(-0.78867513459481288).epsilon(1e-15));
  CHECK(rep.roots[1].re == doctest::Approx(-0.21132486540518712).epsilon(1e-15));
  CHECK(rep.roots[0].im == 0.0);
  CHECK(rep.roots[1].im == 0.0);
  CHECK(rep.max_residual <= 1e-10);
}

TEST_CASE("roots come back sorted with residuals under the target") {
  IntPoly p{1};
  for (int r = 1; r <= 7; ++r) p = p * IntPoly{r, 1};  // roots -1..-7
  RootReport rep = find_roots(p);
  REQUIRE(rep.roots.size() == 7);
  CHECK(rep.is_real_rooted);
  CHECK(rep.exact_real_count == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(rep.roots[static_cast<size_t>(i)].re == doctest::Approx(-(7 - i)).epsilon(1e-13));
    CHECK(rep.roots[static_cast<size_t>(i)].im == 0.0);
    CHECK(rep.roots[static_cast<size_t>(i)].residual <= 1e-10);
  }
  CHECK(rep.failed_indices.empty());
}

TEST_CASE("multiple roots are emitted with multiplicity") {
  IntPoly p = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-2, 1};  // (x+1)^3 (x-2)
  RootReport rep = find_roots(p);
  REQUIRE(rep.roots.size() == 4);
  CHECK(rep.exact_real_count == 4);
  CHECK(rep.roots[0].re == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(rep.roots[1].re == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(rep.roots[2].re == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(rep.roots[3].re == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("zero roots are split off exactly") {
  IntPoly p = IntPoly::monomial(2) * IntPoly{-1, 1};  // x^2 (x - 1)
  RootReport rep = find_roots(p);
  REQUIRE(rep.roots.size() == 3);
  CHECK(rep.roots[0].re == 0.0);
  CHECK(rep.roots[0].im == 0.0);
  CHECK(rep.roots[0].residual == 0.0);
  CHECK(rep.roots[1].re == 0.0);
  CHECK(rep.roots[2].re == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.exact_real_count == 3);
}

TEST_CASE("random real-rooted products: numeric and exact counts agree") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> root(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    IntPoly p{1};
    std::vector<int> used;
    for (int i = 0; i < 6; ++i) {
      int r = root(rng);
      p = p * IntPoly{r, 1};
      used.push_back(r);
    }
    RootReport rep = find_roots(p);
    CHECK(rep.is_real_rooted);
    CHECK(rep.converged);
    long numeric_real = 0;
    for (const auto& r : rep.roots)
      if (std::fabs(r.im) < 1e-6) ++numeric_real;
    CHECK(numeric_real == rep.exact_real_count);
  }
}

TEST_CASE("precision escalates from a deliberately tiny start") {
  RootFindOptions opts;
  opts.precision_bits = 8;  // far below the default; escalation must rescue it
  IntPoly p{1};
  for (int r = 1; r <= 10; ++r) p = p * IntPoly{r, 1};
  RootReport rep = find_roots(p, opts);
  CHECK(rep.converged);
  CHECK(rep.max_residual <= opts.residual_target);
  CHECK(rep.roots.front().re == doctest::Approx(-10.0).epsilon(1e-12));
}

TEST_CASE("clustered roots stay separated") {
  // roots at -1, -1.0001 (scaled): (10000x + 10000)(10000x + 10001)
  IntPoly p = IntPoly{10000, 10000} * IntPoly{10001, 10000};
  RootReport rep = find_roots(p);
  CHECK(rep.exact_real_count == 2);
  CHECK(rep.roots[0].re == doctest::Approx(-1.0001).epsilon(1e-12));
  CHECK(rep.roots[1].re == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("degree precondition") {
  CHECK_THROWS_AS(find_roots(IntPoly{5}), std::invalid_argument);
  CHECK_THROWS_AS(find_roots(IntPoly{}), std::invalid_argument);
}

TEST_CASE("Petersen classification") {
  auto [real_rooted, rep] = classify_parity_instance({5, 2});
  CHECK(real_rooted);
  CHECK(rep.degree == 4);
  CHECK(rep.exact_real_count == 4);
  CHECK(rep.max_residual <= 1e-10);
}

TEST_CASE("GP(12,2) is real-rooted, certified exactly") {
  auto [real_rooted, rep] = classify_parity_instance({12, 2});
  CHECK(real_rooted);
  CHECK(rep.degree == 9);
  CHECK(rep.exact_real_count == 9);
}

TEST_CASE("conjugate pairs close within the pairing tolerance") {
  const IntPoly p = independence_polynomial({9, 2});  // known non-real pair
  RootReport rep = find_roots(p);
  CHECK(rep.pairing_ok);
  CHECK(rep.exact_real_count < rep.degree);
  std::vector<NumericRoot> nonreal;
  for (const auto& r : rep.roots)
    if (r.im != 0.0) nonreal.push_back(r);
  REQUIRE(nonreal.size() % 2 == 0);
  for (size_t i = 0; i + 1 < nonreal.size(); i += 2) {
    CHECK(nonreal[i].re == nonreal[i + 1].re);
    CHECK(nonreal[i].im == -nonreal[i + 1].im);
  }
}
