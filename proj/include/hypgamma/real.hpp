#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypgamma {

// Every value carries this many extra decimal digits on top of its nominal
// precision; results are rounded back to nominal only on output. 15 digits
// absorb the worst cancellation in the rising-weight constants (the r = 9
// entry cancels ~2 digits out of terms of size O(1)).
inline constexpr int kGuardDigits = 15;
inline constexpr int kDefaultDigits = 15;
inline constexpr int kMaxDigits = 100;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Non-positive-integer argument to gamma/digamma, or argument outside the
// positive domain the evaluation formulas assume.
struct PoleError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
// Quadrature refinement limit hit before reaching the requested tolerance.
struct ToleranceError : Error {
  using Error::Error;
};
// Semi-infinite integrand's tail bound failed to shrink.
struct DecayError : Error {
  using Error::Error;
};

// Binary precision backing `digits` significant decimal digits plus guard.
mpfr_prec_t bits_for_digits(int digits);

/// Arbitrary-precision real with an explicit working precision in decimal
/// digits. All arithmetic uses a single correctly-rounded MPFR operation in
/// round-to-nearest-even at max(operand digits) + kGuardDigits, so repeated
/// evaluation of an expression is bit-identical.
class PrecReal {
 public:
  PrecReal() : PrecReal(0L, kDefaultDigits) {}
  PrecReal(long value, int digits);
  PrecReal(const PrecReal& other);
  PrecReal(PrecReal&& other) noexcept;
  PrecReal& operator=(const PrecReal& other);
  PrecReal& operator=(PrecReal&& other) noexcept;
  ~PrecReal();

  static PrecReal zero(int digits) { return PrecReal(0L, digits); }
  static PrecReal from_string(std::string_view text, int digits);
  static PrecReal from_double(double value, int digits);
  static PrecReal from_integer(const mpz_t value, int digits);
  static PrecReal from_rational(const mpq_t value, int digits);

  int digits() const { return digits_; }
  // Copy rounded (or zero-padded) to a new nominal precision.
  PrecReal with_digits(int digits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Scientific-notation string with `significant` digits (nominal precision
  // when negative). Deterministic: used by the bit-identity tests.
  std::string to_string(int significant = -1) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
  int digits_;
};

PrecReal operator+(const PrecReal& a, const PrecReal& b);
PrecReal operator-(const PrecReal& a, const PrecReal& b);
PrecReal operator*(const PrecReal& a, const PrecReal& b);
PrecReal operator/(const PrecReal& a, const PrecReal& b);
PrecReal operator+(const PrecReal& a, long b);
PrecReal operator-(const PrecReal& a, long b);
PrecReal operator*(const PrecReal& a, long b);
PrecReal operator/(const PrecReal& a, long b);
PrecReal operator+(long a, const PrecReal& b);
PrecReal operator-(long a, const PrecReal& b);
PrecReal operator*(long a, const PrecReal& b);
PrecReal operator/(long a, const PrecReal& b);
PrecReal operator-(const PrecReal& a);

PrecReal& operator+=(PrecReal& a, const PrecReal& b);
PrecReal& operator-=(PrecReal& a, const PrecReal& b);
PrecReal& operator*=(PrecReal& a, const PrecReal& b);
PrecReal& operator/=(PrecReal& a, const PrecReal& b);

bool operator==(const PrecReal& a, const PrecReal& b);
bool operator!=(const PrecReal& a, const PrecReal& b);
bool operator<(const PrecReal& a, const PrecReal& b);
bool operator<=(const PrecReal& a, const PrecReal& b);
bool operator>(const PrecReal& a, const PrecReal& b);
bool operator>=(const PrecReal& a, const PrecReal& b);
bool operator==(const PrecReal& a, long b);
bool operator!=(const PrecReal& a, long b);
bool operator<(const PrecReal& a, long b);
bool operator<=(const PrecReal& a, long b);
bool operator>(const PrecReal& a, long b);
bool operator>=(const PrecReal& a, long b);

PrecReal abs(const PrecReal& x);
PrecReal sqrt(const PrecReal& x);
PrecReal exp(const PrecReal& x);
PrecReal expm1(const PrecReal& x);
PrecReal log(const PrecReal& x);
PrecReal log1p(const PrecReal& x);
PrecReal sin(const PrecReal& x);
PrecReal cos(const PrecReal& x);
PrecReal pow(const PrecReal& base, const PrecReal& exponent);
PrecReal pow(const PrecReal& base, long exponent);
const PrecReal& min(const PrecReal& a, const PrecReal& b);
const PrecReal& max(const PrecReal& a, const PrecReal& b);

PrecReal pi(int digits);
PrecReal ln2(int digits);
// 10^e at the given precision (exact while representable).
PrecReal pow10(long e, int digits);

std::ostream& operator<<(std::ostream& os, const PrecReal& x);

}  // namespace hypgamma
