#include "wesym/bigfloat.hpp"

#include <climits>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "wesym/error.hpp"

namespace wesym {

namespace {

mpfr_prec_t clamp_prec(mpfr_prec_t p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long double v, mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_ld(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v, mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::parse(const std::string& s, mpfr_prec_t prec) {
  BigFloat r(prec);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw Error(Errc::ParseError, "invalid number '" + s + "'");
  }
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

void BigFloat::set_prec(mpfr_prec_t prec) { mpfr_prec_round(v_, clamp_prec(prec), MPFR_RNDN); }

long BigFloat::exponent() const noexcept {
  if (!mpfr_regular_p(v_)) return LONG_MIN;
  return mpfr_get_exp(v_);
}

std::string BigFloat::to_string() const {
  // Digits needed to round-trip a p-bit binary value.
  const std::size_t digits = static_cast<std::size_t>(std::ceil(prec() * 0.30102999566398120)) + 1;
  return to_string(digits);
}

std::string BigFloat::to_string(std::size_t digits) const {
  if (mpfr_zero_p(v_)) return "0";
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(digits ? digits - 1 : 0) + "Re";
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) return "nan";
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

#define WESYM_BINOP(op, fn)                                           \
  BigFloat& BigFloat::operator op##=(const BigFloat& o) {             \
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);  \
    fn(v_, v_, o.v_, MPFR_RNDN);                                      \
    return *this;                                                     \
  }                                                                   \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) {        \
    BigFloat r(std::max(a.prec(), b.prec()));                         \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                  \
    return r;                                                         \
  }

WESYM_BINOP(+, mpfr_add)
WESYM_BINOP(-, mpfr_sub)
WESYM_BINOP(*, mpfr_mul)
WESYM_BINOP(/, mpfr_div)
#undef WESYM_BINOP

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat exp2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& theta) {
  BigFloat s(theta.prec()), c(theta.prec());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return {c * r, s * r};
}

BigComplex BigComplex::parse(const std::string& text, mpfr_prec_t prec) {
  std::string s = text;
  const auto at = s.find("@p");
  if (at != std::string::npos) {
    const std::string tag = s.substr(at + 2);
    char* end = nullptr;
    const long bits = std::strtol(tag.c_str(), &end, 10);
    if (tag.empty() || *end != '\0' || bits < MPFR_PREC_MIN) {
      throw Error(Errc::ParseError, "invalid precision tag in '" + text + "'");
    }
    if (prec == 0) prec = bits;
    s = s.substr(0, at);
  }
  if (prec == 0) prec = kDefaultPrecision;
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') {
    throw Error(Errc::ParseError, "expected '(re,im)' in '" + text + "'");
  }
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(Errc::ParseError, "missing ',' in '" + text + "'");
  return {BigFloat::parse(s.substr(1, comma - 1), prec),
          BigFloat::parse(s.substr(comma + 1, s.size() - comma - 2), prec)};
}

void BigComplex::set_prec(mpfr_prec_t prec) {
  re_.set_prec(prec);
  im_.set_prec(prec);
}

BigFloat BigComplex::abs() const {
  BigFloat r(prec());
  mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigFloat BigComplex::arg() const {
  BigFloat r(prec());
  mpfr_atan2(r.raw(), im_.raw(), re_.raw(), MPFR_RNDN);
  return r;
}

std::string BigComplex::to_string() const {
  return "(" + re_.to_string() + "," + im_.to_string() + ")@p" + std::to_string(prec());
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  const mpfr_prec_t p = std::max(prec(), o.prec());
  BigFloat r(p), i(p), t(p);
  mpfr_mul(r.raw(), re_.raw(), o.re_.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), im_.raw(), o.im_.raw(), MPFR_RNDN);
  mpfr_sub(r.raw(), r.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul(i.raw(), re_.raw(), o.im_.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), im_.raw(), o.re_.raw(), MPFR_RNDN);
  mpfr_add(i.raw(), i.raw(), t.raw(), MPFR_RNDN);
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const BigFloat d = o.norm();
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "complex division by zero");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

BigComplex pow(const BigComplex& z, std::size_t e) {
  BigComplex r(BigFloat(1.0L, z.prec()), BigFloat(z.prec()));
  BigComplex b = z;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

}  // namespace wesym
