#include "ipgp/int_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ipgp {

namespace {
const mpz_class kZero = 0;
}

void IntPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
  std::vector<mpz_class> v;
  v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(int power, mpz_class c) {
  if (power < 0) throw std::invalid_argument("monomial power must be >= 0");
  std::vector<mpz_class> v(power + 1);
  v[power] = std::move(c);
  return IntPoly(std::move(v));
}

const mpz_class& IntPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[power];
}

const mpz_class& IntPoly::lead() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

int IntPoly::order_at_zero() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

IntPoly IntPoly::shifted_down(int m) const {
  if (m <= 0) return *this;
  if (m >= static_cast<int>(coeffs_.size())) return IntPoly();
  return IntPoly(std::vector<mpz_class>(coeffs_.begin() + m, coeffs_.end()));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] -= b.coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];  // gmpxx fuses into mpz_addmul
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    mpz_class c = coeffs_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0 || c != 1) os << c.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace ipgp
