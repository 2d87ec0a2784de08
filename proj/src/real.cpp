#include "hypgamma/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

namespace hypgamma {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw DomainError("precision must be a positive digit count");
  // log2(10) = 3.3219...; the +8 slack keeps directed roundings of the
  // conversion itself out of the guard budget.
  const double bits = (digits + kGuardDigits) * 3.3219280948873623;
  return static_cast<mpfr_prec_t>(bits) + 8;
}

PrecReal::PrecReal(long value, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for_digits(digits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

PrecReal::PrecReal(const PrecReal& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

PrecReal& PrecReal::operator=(const PrecReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  digits_ = other.digits_;
  return *this;
}

PrecReal::~PrecReal() { mpfr_clear(v_); }

PrecReal PrecReal::from_string(std::string_view text, int digits) {
  PrecReal r(0, digits);
  std::string buf(text);
  if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("unparseable numeric literal: " + buf);
  return r;
}

PrecReal PrecReal::from_double(double value, int digits) {
  PrecReal r(0, digits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_integer(const mpz_t value, int digits) {
  PrecReal r(0, digits);
  mpfr_set_z(r.v_, value, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_rational(const mpq_t value, int digits) {
  PrecReal r(0, digits);
  mpfr_set_q(r.v_, value, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::with_digits(int digits) const {
  PrecReal r(0, digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string PrecReal::to_string(int significant) const {
  if (significant < 1) significant = digits_;
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", significant - 1, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

PrecReal binary(const PrecReal& a, const PrecReal& b, BinaryOp op) {
  PrecReal r(0, std::max(a.digits(), b.digits()));
  op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

PrecReal unary(const PrecReal& a, UnaryOp op) {
  PrecReal r(0, a.digits());
  op(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

PrecReal operator+(const PrecReal& a, const PrecReal& b) { return binary(a, b, mpfr_add); }
PrecReal operator-(const PrecReal& a, const PrecReal& b) { return binary(a, b, mpfr_sub); }
PrecReal operator*(const PrecReal& a, const PrecReal& b) { return binary(a, b, mpfr_mul); }
PrecReal operator/(const PrecReal& a, const PrecReal& b) { return binary(a, b, mpfr_div); }

PrecReal operator+(const PrecReal& a, long b) {
  PrecReal r(0, a.digits());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
PrecReal operator-(const PrecReal& a, long b) {
  PrecReal r(0, a.digits());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
PrecReal operator*(const PrecReal& a, long b) {
  PrecReal r(0, a.digits());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
PrecReal operator/(const PrecReal& a, long b) {
  PrecReal r(0, a.digits());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
PrecReal operator+(long a, const PrecReal& b) { return b + a; }
PrecReal operator-(long a, const PrecReal& b) {
  PrecReal r(0, b.digits());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
PrecReal operator*(long a, const PrecReal& b) { return b * a; }
PrecReal operator/(long a, const PrecReal& b) {
  PrecReal r(0, b.digits());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
PrecReal operator-(const PrecReal& a) { return unary(a, mpfr_neg); }

PrecReal& operator+=(PrecReal& a, const PrecReal& b) { return a = a + b; }
PrecReal& operator-=(PrecReal& a, const PrecReal& b) { return a = a - b; }
PrecReal& operator*=(PrecReal& a, const PrecReal& b) { return a = a * b; }
PrecReal& operator/=(PrecReal& a, const PrecReal& b) { return a = a / b; }

bool operator==(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }
bool operator!=(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.raw(), b.raw()) != 0; }
bool operator<(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
bool operator<=(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
bool operator>(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
bool operator>=(const PrecReal& a, const PrecReal& b) { return mpfr_cmp(a.raw(), b.raw()) >= 0; }
bool operator==(const PrecReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }
bool operator!=(const PrecReal& a, long b) { return mpfr_cmp_si(a.raw(), b) != 0; }
bool operator<(const PrecReal& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
bool operator<=(const PrecReal& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
bool operator>(const PrecReal& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
bool operator>=(const PrecReal& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }

PrecReal abs(const PrecReal& x) { return unary(x, mpfr_abs); }
PrecReal sqrt(const PrecReal& x) { return unary(x, mpfr_sqrt); }
PrecReal exp(const PrecReal& x) { return unary(x, mpfr_exp); }
PrecReal expm1(const PrecReal& x) { return unary(x, mpfr_expm1); }
PrecReal log(const PrecReal& x) { return unary(x, mpfr_log); }
PrecReal log1p(const PrecReal& x) { return unary(x, mpfr_log1p); }
PrecReal sin(const PrecReal& x) { return unary(x, mpfr_sin); }
PrecReal cos(const PrecReal& x) { return unary(x, mpfr_cos); }

PrecReal pow(const PrecReal& base, const PrecReal& exponent) {
  return binary(base, exponent, mpfr_pow);
}

PrecReal pow(const PrecReal& base, long exponent) {
  PrecReal r(0, base.digits());
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

const PrecReal& min(const PrecReal& a, const PrecReal& b) { return b < a ? b : a; }
const PrecReal& max(const PrecReal& a, const PrecReal& b) { return a < b ? b : a; }

PrecReal pi(int digits) {
  PrecReal r(0, digits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

PrecReal ln2(int digits) {
  PrecReal r(0, digits);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

PrecReal pow10(long e, int digits) {
  PrecReal r(0, digits);
  mpfr_ui_pow_ui(r.raw(), 10u, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const PrecReal& x) {
  return os << x.to_string();
}

}  // namespace hypgamma
