#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

namespace ipgp {

// RAII wrapper around mpfr_t.  Every arithmetic result carries the maximum
// precision of its operands, so precision decisions are made once, at the
// point where inputs are created.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigFloat(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(const mpz_class& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.precision());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  // 2^e at the given precision (exact).
  static BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()) == 0; }

inline BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
// a^(1/n) for a >= 0.
inline BigFloat rootn(const BigFloat& a, unsigned long n) {
  BigFloat r(a.precision());
  mpfr_rootn_ui(r.get(), a.get(), n, MPFR_RNDN);
  return r;
}
inline BigFloat cos(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_cos(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline BigFloat sin(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sin(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline BigFloat const_pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

// Complex number over BigFloat.  MPFR's exponent range (around +-2^62) makes
// the naive division formula safe here; no Smith-style rescaling is needed.
struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

inline BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }

}  // namespace ipgp
