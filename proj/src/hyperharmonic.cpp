#include "hypgamma/hyperharmonic.hpp"

#include <algorithm>

#include "hypgamma/specfun.hpp"

namespace hypgamma::hyperharmonic {

std::vector<mpq_class> exact_prefix(unsigned long n, unsigned r) {
  if (n < 1) throw DomainError("hyperharmonic index must be positive");
  std::vector<mpq_class> row(n);
  for (unsigned long i = 0; i < n; ++i) row[i] = mpq_class(1, i + 1);
  for (unsigned order = 1; order <= r; ++order)
    for (unsigned long i = 1; i < n; ++i) row[i] += row[i - 1];
  return row;
}

mpq_class exact(unsigned long n, unsigned r) { return exact_prefix(n, r).back(); }

namespace {

void check_domain(const PrecReal& x, const PrecReal& r) {
  if (!(x > 0)) throw DomainError("nonpositive argument x");
  if (!(r >= 0)) throw DomainError("negative order r");
}

}  // namespace

PrecReal analytic(const PrecReal& x, const PrecReal& r) {
  check_domain(x, r);
  const int digits = std::max(x.digits(), r.digits());
  if (r.is_zero()) return 1 / x.with_digits(digits);
  const PrecReal dpsi = specfun::digamma(x + r) - specfun::digamma(r.with_digits(digits));
  return specfun::rising_factorial(x, r) * dpsi /
         (x * specfun::gamma_fn(r.with_digits(digits)));
}

PrecReal over_power(const PrecReal& x, const PrecReal& r) {
  check_domain(x, r);
  const int digits = std::max(x.digits(), r.digits());
  if (r.is_zero()) return 1 / x.with_digits(digits);
  const PrecReal dpsi = specfun::digamma(x + r) - specfun::digamma(r.with_digits(digits));
  return specfun::rising_factorial(x, r) * dpsi /
         (specfun::gamma_fn(r.with_digits(digits)) * pow(x.with_digits(digits), r + 1));
}

PrecReal over_rising(const PrecReal& x, const PrecReal& r) {
  check_domain(x, r);
  const int digits = std::max(x.digits(), r.digits());
  if (r.is_zero()) return 1 / x.with_digits(digits);
  const PrecReal dpsi = specfun::digamma(x + r) - specfun::digamma(r.with_digits(digits));
  return dpsi / (x * specfun::gamma_fn(r.with_digits(digits)));
}

}  // namespace hypgamma::hyperharmonic
