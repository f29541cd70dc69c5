#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace ipgp {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Canonical form: coeffs()[i] is the coefficient of x^i, the highest stored
/// coefficient is nonzero, and the zero polynomial stores no coefficients at
/// all. degree() of the zero polynomial is -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize();
  }
  IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    canonicalize();
  }

  static IntPoly constant(mpz_class c);
  // c * x^power
  static IntPoly monomial(int power, mpz_class c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  // Coefficient of x^power; zero beyond the stored range.
  const mpz_class& coeff(int power) const;
  // Leading coefficient; zero for the zero polynomial.
  const mpz_class& lead() const;

  IntPoly derivative() const;
  mpz_class eval(const mpz_class& x) const;

  // Largest m such that x^m divides the polynomial (0 for the zero polynomial).
  int order_at_zero() const;
  // The polynomial divided by x^m.
  IntPoly shifted_down(int m) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  bool operator==(const IntPoly&) const = default;

  // Human-readable form, e.g. "1 + 6x + 6x^2".
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<mpz_class> coeffs_;
};

}  // namespace ipgp
