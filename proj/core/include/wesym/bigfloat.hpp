#pragma once

#include <cstdarg>
#include <cstdio>
#include <complex>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace wesym {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;

// RAII wrapper over an MPFR value. Binary operations round to nearest and
// produce a result carrying the larger operand precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
  BigFloat(long double v, mpfr_prec_t prec);
  BigFloat(const mpz_class& v, mpfr_prec_t prec);
  BigFloat(const mpq_class& v, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  // Decimal or "@"-free MPFR syntax; throws ParseError.
  static BigFloat parse(const std::string& s, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }
  // Rounds the value in place to a new precision.
  void set_prec(mpfr_prec_t prec);
  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  long double to_ld() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  long exponent() const noexcept;  // binary exponent; LONG_MIN for zero

  // Shortest decimal with enough digits to round-trip at this precision.
  std::string to_string() const;
  std::string to_string(std::size_t digits) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat max(const BigFloat& a, const BigFloat& b);
// 2^e at the given precision.
BigFloat exp2(long e, mpfr_prec_t prec);

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(std::complex<long double> z, mpfr_prec_t prec)
      : re_(z.real(), prec), im_(z.imag(), prec) {}
  BigComplex(const mpq_class& re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

  // e^(i theta) * r.
  static BigComplex polar(const BigFloat& r, const BigFloat& theta);
  // "(re,im)" optionally followed by "@p<bits>"; throws ParseError.
  static BigComplex parse(const std::string& s, mpfr_prec_t prec = 0);

  const BigFloat& re() const noexcept { return re_; }
  const BigFloat& im() const noexcept { return im_; }
  BigFloat& re() noexcept { return re_; }
  BigFloat& im() noexcept { return im_; }
  mpfr_prec_t prec() const noexcept { return std::max(re_.prec(), im_.prec()); }
  void set_prec(mpfr_prec_t prec);

  std::complex<long double> to_cld() const { return {re_.to_ld(), im_.to_ld()}; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  BigFloat abs() const;
  BigFloat norm() const;  // |z|^2
  BigFloat arg() const;
  BigComplex conj() const { return {re_, -im_}; }

  // "(re,im)@p<bits>", round-trip exact at this precision.
  std::string to_string() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& s);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex pow(const BigComplex& z, std::size_t e);

}  // namespace wesym
