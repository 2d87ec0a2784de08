#include "hypgamma/squeeze.hpp"

#include <algorithm>

#include "hypgamma/specfun.hpp"

namespace hypgamma {

PrecReal default_quad_tol(int digits) { return pow10(-(digits + 5), digits); }

namespace squeeze {

Weighted::Weighted(Flavor flavor, const PrecReal& r, int digits)
    : flavor_(flavor),
      r_(r.with_digits(digits)),
      digits_(digits),
      r_zero_(r.is_zero()),
      r_int_(-1),
      psi_r_(0, digits),
      gamma_r_(1, digits) {
  if (!(r >= 0)) throw DomainError("negative order r");
  if (r.is_integer() && r >= 0 && r <= 64) r_int_ = r.to_long();
  if (!r_zero_) {
    psi_r_ = specfun::digamma(r_);
    gamma_r_ = specfun::gamma_fn(r_);
  }
}

PrecReal Weighted::operator()(const PrecReal& x) const {
  if (r_zero_) return 1 / x;
  const PrecReal dpsi = specfun::digamma(x + r_) - psi_r_;
  if (flavor_ == Flavor::rising) return dpsi / (x * gamma_r_);
  PrecReal rising(1, digits_);
  if (r_int_ >= 0) {
    for (long i = 0; i < r_int_; ++i) rising *= (x + i);
    return rising * dpsi / (gamma_r_ * pow(x, r_int_ + 1));
  }
  rising = specfun::gamma_fn(x + r_) / specfun::gamma_fn(x.with_digits(digits_));
  return rising * dpsi / (gamma_r_ * pow(x, r_ + 1));
}

SequenceTrace::SequenceTrace(Flavor flavor, const PrecReal& r, long n_max,
                             const PrecReal& quad_tol, int digits, Exec exec)
    : flavor_(flavor),
      r_(r.with_digits(digits)),
      n_max_(n_max),
      digits_(digits),
      quad_tol_(quad_tol.with_digits(digits)) {
  if (n_max < 1) throw DomainError("n_max must be positive");
  if (!(quad_tol_ > 0)) throw DomainError("quad_tol must be positive");
  const Weighted f(flavor, r_, digits);
  const Integrand integrand = [&f](const PrecReal& x) { return f(x); };
  const QuadratureSpec panel_spec = QuadratureSpec::finite(quad_tol_ / n_max);

  terms_.assign(n_max + 2, PrecReal::zero(digits));
  panels_.assign(n_max + 1, PrecReal::zero(digits));
  parallel_for(1, n_max + 2, exec, [&](long k) { terms_[k] = f.term(k); });
  parallel_for(1, n_max + 1, exec, [&](long k) {
    panels_[k] =
        integrate_finite(integrand, PrecReal(k, digits), PrecReal(k + 1, digits), panel_spec);
  });

  sums_.assign(n_max + 2, PrecReal::zero(digits));
  for (long k = 1; k <= n_max + 1; ++k) sums_[k] = sums_[k - 1] + terms_[k];
  integrals_.assign(n_max + 1, PrecReal::zero(digits));
  for (long n = 2; n <= n_max; ++n) integrals_[n] = integrals_[n - 1] + panels_[n - 1];
}

void SequenceTrace::check_n(long n, long hi) const {
  if (n < 1 || n > hi) throw DomainError("sequence index out of range");
}

const PrecReal& SequenceTrace::term(long k) const {
  check_n(k, n_max_ + 1);
  return terms_[k];
}

const PrecReal& SequenceTrace::panel(long k) const {
  check_n(k, n_max_);
  return panels_[k];
}

const PrecReal& SequenceTrace::integral_to(long n) const {
  check_n(n, n_max_);
  return integrals_[n];
}

PrecReal SequenceTrace::upper(long n) const {
  check_n(n, n_max_);
  return sums_[n] - integrals_[n];
}

PrecReal SequenceTrace::lower(long n) const {
  check_n(n, n_max_);
  return sums_[n - 1] - integrals_[n];
}

Bracket SequenceTrace::bracket(long n) const {
  return Bracket{flavor_, r_, n, lower(n), upper(n), quad_tol_};
}

std::pair<PrecReal, PrecReal> SequenceTrace::refined(long n) const {
  check_n(n, n_max_);
  const PrecReal low = lower(n) + (term(n) - panel(n));
  return {low, low + term(n + 1)};
}

namespace {

SequenceTrace mini_trace(Flavor flavor, long n, const PrecReal& r, const PrecReal& quad_tol,
                         int digits) {
  return SequenceTrace(flavor, r, n, quad_tol, digits, Exec::parallel);
}

PrecReal single_panel(Flavor flavor, long n, const PrecReal& r, const PrecReal& quad_tol,
                      int digits) {
  const Weighted f(flavor, r, digits);
  const Integrand integrand = [&f](const PrecReal& x) { return f(x); };
  return integrate_finite(integrand, PrecReal(n, digits), PrecReal(n + 1, digits),
                          QuadratureSpec::finite(quad_tol));
}

}  // namespace

PrecReal seq_y(long n, const PrecReal& r, const PrecReal& quad_tol, int digits) {
  return mini_trace(Flavor::power, n, r, quad_tol, digits).upper(n);
}
PrecReal seq_z(long n, const PrecReal& r, const PrecReal& quad_tol, int digits) {
  return mini_trace(Flavor::power, n, r, quad_tol, digits).lower(n);
}
PrecReal seq_a(long n, const PrecReal& r, const PrecReal& quad_tol, int digits) {
  return mini_trace(Flavor::rising, n, r, quad_tol, digits).lower(n);
}
PrecReal seq_b(long n, const PrecReal& r, const PrecReal& quad_tol, int digits) {
  return mini_trace(Flavor::rising, n, r, quad_tol, digits).upper(n);
}

PrecReal bound_B(long n, const PrecReal& r, const PrecReal& quad_tol, int digits) {
  return single_panel(Flavor::power, n, r, quad_tol, digits);
}
PrecReal bound_A(long n, const PrecReal& r, const PrecReal& quad_tol, int digits) {
  const Weighted f(Flavor::power, r, digits);
  return f.term(n) - bound_B(n, r, quad_tol, digits);
}
PrecReal bound_D(long n, const PrecReal& r, const PrecReal& quad_tol, int digits) {
  return single_panel(Flavor::rising, n, r, quad_tol, digits);
}
PrecReal bound_C(long n, const PrecReal& r, const PrecReal& quad_tol, int digits) {
  const Weighted f(Flavor::rising, r, digits);
  return f.term(n) - bound_D(n, r, quad_tol, digits);
}

Bracket squeeze_estimate(Flavor flavor, const PrecReal& r, long n_max, const PrecReal& quad_tol,
                         int digits, Exec exec) {
  return SequenceTrace(flavor, r, n_max, quad_tol, digits, exec).bracket(n_max);
}

std::pair<PrecReal, PrecReal> refined_estimate(Flavor flavor, const PrecReal& r, long n,
                                               const PrecReal& quad_tol, int digits, Exec exec) {
  return SequenceTrace(flavor, r, n, quad_tol, digits, exec).refined(n);
}

}  // namespace squeeze
}  // namespace hypgamma
