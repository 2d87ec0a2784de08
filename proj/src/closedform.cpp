#include "hypgamma/closedform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "hypgamma/hyperharmonic.hpp"
#include "hypgamma/quadrature.hpp"
#include "hypgamma/specfun.hpp"

namespace hypgamma::closedform {

namespace {

constexpr double kTwoPi = 6.283185307179586;

PrecReal from_q(const mpq_class& q, int digits) {
  return PrecReal::from_rational(q.get_mpq_t(), digits);
}

PrecReal from_z(const mpz_class& z, int digits) {
  return PrecReal::from_integer(z.get_mpz_t(), digits);
}

PrecReal harmonic_q(unsigned long n, int digits) {
  return from_q(specfun::harmonic_exact(n), digits);
}

PrecReal truncation_eps(int digits) { return pow10(-(digits + 12), digits); }

}  // namespace

PrecReal sigma_p(unsigned p, int digits) {
  if (p < 1) throw DomainError("sigma_p requires p >= 1");
  PrecReal acc = ln2(digits);
  const PrecReal eps = truncation_eps(digits);
  const long cap = 4L * (digits + kGuardDigits) + 40;
  for (long k = 1; k <= cap; ++k) {
    const PrecReal t = specfun::zeta_minus_one_int(static_cast<long>(p) + k, digits) / k;
    if (k % 2 == 1)
      acc += t;
    else
      acc -= t;
    // alternating with geometrically shrinking terms: remainder below t
    if (t < eps) break;
  }
  return acc;
}

PrecReal log_zeta_sum(unsigned p, int digits) {
  if (p < 2) throw DomainError("log_zeta_sum requires p >= 2");
  return sigma_p(p, digits) - specfun::zeta_prime_int(static_cast<long>(p), digits);
}

namespace {

// ln(1+u)/u = sum_k (-1)^k u^k/(k+1), |u| < 1.
PrecReal log1p_over(const PrecReal& u, int digits) {
  PrecReal acc(0, digits);
  PrecReal p(1, digits);
  const PrecReal eps = truncation_eps(digits);
  for (long k = 0;; ++k) {
    const PrecReal t = p / (k + 1);
    if (k % 2 == 0)
      acc += t;
    else
      acc -= t;
    if (abs(t) < eps) break;
    p *= u;
  }
  return acc;
}

// z/(e^z - 1) = sum_n B_n z^n/n!, |z| < 2 pi.
PrecReal bernoulli_factor(const PrecReal& z, int digits) {
  PrecReal acc = 1 - z / 2;
  const PrecReal z2 = z * z;
  PrecReal p(1, digits);
  const PrecReal eps = truncation_eps(digits);
  for (long k = 1; k <= 512; ++k) {
    p *= z2;
    mpq_class c = specfun::bernoulli(static_cast<unsigned>(2 * k)) /
                  specfun::factorial(static_cast<unsigned>(2 * k));
    const PrecReal t = from_q(c, digits) * p;
    acc += t;
    if (abs(t) < eps) break;
  }
  return acc;
}

// Below this the kernels switch to their local series.
bool small_t(const PrecReal& t) { return t < PrecReal::from_double(0.0625, t.digits()); }

}  // namespace

PrecReal log_kernel(const PrecReal& t) {
  const int digits = t.digits();
  if (t < 0) throw DomainError("log kernel defined for t >= 0");
  if (small_t(t)) {
    const PrecReal two_pi = 2 * pi(digits);
    return log1p_over(t * t, digits) * bernoulli_factor(two_pi * t, digits) / two_pi;
  }
  return log1p(t * t) / (t * expm1(2 * pi(digits) * t));
}

PrecReal log_kernel_n(const PrecReal& t, long n) {
  const int digits = t.digits();
  if (t < 0) throw DomainError("log kernel defined for t >= 0");
  if (n < 1) throw DomainError("n must be positive");
  if (small_t(t)) {
    const PrecReal two_pi = 2 * pi(digits);
    const PrecReal u = t * t;
    const PrecReal un = u / (n * n);
    const PrecReal numerator = log1p_over(u, digits) - log1p_over(un, digits) / (n * n);
    return numerator * bernoulli_factor(two_pi * t, digits) / two_pi;
  }
  const PrecReal tn = t / n;
  return (log1p(t * t) - log1p(tn * tn)) / (t * expm1(2 * pi(digits) * t));
}

PrecReal j_integral(int digits) {
  static std::map<int, PrecReal> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(digits);
    if (it != cache.end()) return it->second;
  }
  const QuadratureSpec spec = QuadratureSpec::semi_infinite(pow10(-(digits + 10), digits));
  const Integrand f = [](const PrecReal& t) { return log_kernel(t); };
  PrecReal value = integrate_semi_infinite(f, PrecReal(0, digits), spec, kTwoPi);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(digits, std::move(value)).first->second;
}

PrecReal psi_integral(unsigned p, int digits) {
  if (p < 2) throw DomainError("psi_integral requires p >= 2");
  const long pl = static_cast<long>(p);
  PrecReal acc = -specfun::euler_gamma(digits) / (pl - 1);
  const PrecReal core = log_zeta_sum(p, digits);
  acc += (p % 2 == 0) ? core : -core;
  for (long j = 2; j <= pl - 1; ++j) {
    const PrecReal t = specfun::zeta_int(pl + 1 - j, digits) / (j - 1);
    acc += ((pl - 1 - j) % 2 == 0) ? t : -t;
  }
  return acc;
}

PrecReal euler_sum_h(unsigned p, unsigned r, int digits, TrailingSumLimit limit) {
  if (p < 2) throw DomainError("euler_sum_h requires p >= 2");
  if (r < 1) throw DomainError("euler_sum_h requires r >= 1");
  const long pl = static_cast<long>(p);
  PrecReal acc = (pl + 2) * specfun::zeta_int(pl + 1, digits) / 2;
  for (long j = 1; j <= pl - 2; ++j)
    acc -= specfun::zeta_int(pl - j, digits) * specfun::zeta_int(j + 1, digits) / 2;
  for (long m = 1; m <= pl - 1; ++m) {
    const PrecReal t = specfun::zeta_int(pl + 1 - m, digits) *
                       from_q(specfun::harmonic_gen_exact(r - 1, static_cast<unsigned>(m)),
                              digits);
    acc += (m % 2 == 0) ? -t : t;
  }
  const unsigned m_hi = (limit == TrailingSumLimit::shifted) ? r - 1 : r;
  mpq_class tail = 0;
  mpq_class h = 0;
  for (unsigned long m = 1; m <= m_hi; ++m) {
    h += mpq_class(1, m);
    mpz_class mp;
    mpz_ui_pow_ui(mp.get_mpz_t(), m, p);
    tail += h / mpq_class(mp);
  }
  const PrecReal t = from_q(tail, digits);
  acc += (p % 2 == 0) ? -t : t;
  return acc;
}

PrecReal e_term(unsigned r, unsigned j, int digits) {
  if (j < 1 || j + 1 > r) throw DomainError("e_term requires 1 <= j <= r-1");
  const unsigned p = r + 1 - j;
  return euler_sum_h(p, r, digits) - psi_integral(p, digits);
}

namespace {

PrecReal gamma_h1(int digits) {
  const PrecReal g = specfun::euler_gamma(digits);
  return g * g / 2 + specfun::zeta_int(2, digits) / 2 - PrecReal::from_double(0.5, digits) +
         j_integral(digits);
}

PrecReal half(int digits) { return PrecReal(1, digits) / 2; }

}  // namespace

ConstantResult gamma_h(unsigned r, int digits) {
  ConstantResult res;
  res.flavor = Flavor::power;
  res.r = r;
  res.method = Method::closed;
  res.precision_digits = digits;
  res.est_error = pow10(-(digits + 2), digits);
  if (r == 0) {
    res.value = specfun::euler_gamma(digits);
    return res;
  }
  if (r == 1) {
    res.value = gamma_h1(digits);
    return res;
  }
  const long rl = static_cast<long>(r);
  const PrecReal g = specfun::euler_gamma(digits);
  const PrecReal psi_r = specfun::digamma(PrecReal(rl, digits));
  const PrecReal h_r1 = harmonic_q(r - 1, digits);
  const specfun::StirlingTable table(r);

  PrecReal acc = gamma_h1(digits) - (psi_r + g) * g + from_z(specfun::factorial(r), digits) - rl;
  for (long j = 1; j <= rl - 1; ++j) acc += harmonic_q(j, digits) / j;
  for (long j = 1; j <= rl - 1; ++j) {
    const mpz_class& s = table.at(r, static_cast<unsigned>(j));
    if (s == 0) continue;
    const PrecReal inner = e_term(r, static_cast<unsigned>(j), digits) + psi_r / (rl - j) -
                           PrecReal(rl, digits) / (rl + 1 - j) -
                           h_r1 * specfun::zeta_int(rl + 1 - j, digits);
    acc += from_z(s, digits) * inner;
  }
  res.value = acc / from_z(specfun::factorial(r - 1), digits);
  return res;
}

PrecReal gamma_h_alt(unsigned r, int digits) {
  if (r < 1) throw DomainError("gamma_h_alt requires r >= 1");
  if (r == 1) return gamma_h1(digits);
  const long rl = static_cast<long>(r);
  const PrecReal g = specfun::euler_gamma(digits);
  const PrecReal psi_r = specfun::digamma(PrecReal(rl, digits));
  const PrecReal h_r1 = harmonic_q(r - 1, digits);
  const specfun::StirlingTable table(r);

  PrecReal acc = gamma_h1(digits) - (psi_r + g) * g + from_z(specfun::factorial(r), digits) - rl;
  for (long j = 1; j <= rl - 1; ++j) acc += harmonic_q(j, digits) / j;
  for (long j = 1; j <= rl - 1; ++j) {
    const mpz_class& s = table.at(r, static_cast<unsigned>(j));
    if (s == 0) continue;
    const long q = rl - j;
    PrecReal inner = (rl + 3 - j) * specfun::zeta_int(q + 2, digits) / 2;
    for (long v = 1; v <= q - 1; ++v)
      inner -= specfun::zeta_int(q + 1 - v, digits) * specfun::zeta_int(v + 1, digits) / 2;
    for (long v = 2; v <= q; ++v) {
      const PrecReal sign_q = (q % 2 == 0) ? PrecReal(1, digits) : PrecReal(-1, digits);
      const PrecReal t =
          specfun::zeta_int(q + 2 - v, digits) *
          (from_q(specfun::harmonic_gen_exact(r - 1, static_cast<unsigned>(v)), digits) +
           sign_q / (v - 1));
      inner += (v % 2 == 0) ? -t : t;
    }
    inner += h_r1 / q;
    PrecReal tail = sigma_p(static_cast<unsigned>(q + 1), digits) -
                    specfun::zeta_prime_int(q + 1, digits);
    for (long v = 1; v <= rl - 1; ++v)
      tail += harmonic_q(v, digits) / pow(PrecReal(v, digits), q + 1);
    inner += (q % 2 == 0) ? tail : -tail;
    inner -= PrecReal(rl, digits) / (q + 1);
    acc += from_z(s, digits) * inner;
  }
  return acc / from_z(specfun::factorial(r - 1), digits);
}

ConstantResult gamma_h_bar(unsigned r, int digits) {
  ConstantResult res;
  res.flavor = Flavor::rising;
  res.r = r;
  res.method = Method::closed;
  res.precision_digits = digits;
  res.est_error = pow10(-(digits + 2), digits);
  if (r == 0) {
    res.value = specfun::euler_gamma(digits);
    return res;
  }
  const long rl = static_cast<long>(r);
  const PrecReal g = specfun::euler_gamma(digits);
  const PrecReal psi_r = specfun::digamma(PrecReal(rl, digits));
  PrecReal acc = gamma_h1(digits) - (psi_r + g) * g;
  for (long j = 1; j <= rl - 1; ++j)
    acc += (harmonic_q(j, digits) - log(PrecReal(j + 1, digits))) / j;
  res.value = acc / from_z(specfun::factorial(r - 1), digits);
  return res;
}

PrecReal lemma_top_sum(unsigned r, long n, int digits) {
  if (n < 1) throw DomainError("n must be positive");
  if (r == 0) return specfun::harmonic(n, digits);
  const long rl = static_cast<long>(r);
  const PrecReal g = specfun::euler_gamma(digits);
  const PrecReal psi_r = specfun::digamma(PrecReal(rl, digits));
  const PrecReal c = psi_r + g;  // H_{r-1}
  const specfun::StirlingTable table(r);

  const PrecReal h_n = specfun::harmonic(n, digits);
  PrecReal acc = (h_n * h_n + specfun::harmonic_gen(n, 2, digits)) / 2 - c * h_n;
  for (unsigned j = 0; j + 1 <= r; ++j) {
    const mpz_class& s = table.at(r, j);
    if (s == 0) continue;
    const long p = rl + 1 - static_cast<long>(j);
    // sum_k H_{k+r-1}/k^p with the harmonic factor advanced incrementally
    PrecReal h = harmonic_q(r - 1, digits);
    PrecReal inner(0, digits);
    for (long k = 1; k <= n; ++k) {
      h += 1 / PrecReal(k + rl - 1, digits);
      inner += h / pow(PrecReal(k, digits), p);
    }
    acc += from_z(s, digits) * (inner - c * specfun::harmonic_gen(n, static_cast<unsigned>(p), digits));
  }
  for (long j = 1; j <= rl - 1; ++j) acc += harmonic_q(j, digits) / j;
  // H_{n+r-1} - H_n as a direct sum over (n, n+r-1]
  PrecReal gap(0, digits);
  for (long i = n + 1; i <= n + rl - 1; ++i) gap += 1 / PrecReal(i, digits);
  acc -= harmonic_q(r - 1, digits) * gap;
  for (long j = 1; j <= rl - 1; ++j) acc += harmonic_q(j - 1, digits) / (j + n);
  return acc;
}

PrecReal lemma_top_bar_sum(unsigned r, long n, int digits) {
  if (n < 1) throw DomainError("n must be positive");
  if (r == 0) return specfun::harmonic(n, digits);
  const long rl = static_cast<long>(r);
  const PrecReal g = specfun::euler_gamma(digits);
  const PrecReal psi_r = specfun::digamma(PrecReal(rl, digits));
  const PrecReal c = psi_r + g;

  const PrecReal h_n = specfun::harmonic(n, digits);
  PrecReal acc = (h_n * h_n + specfun::harmonic_gen(n, 2, digits)) / 2 - c * h_n;
  PrecReal gap(0, digits);
  for (long i = n + 1; i <= n + rl - 1; ++i) gap += 1 / PrecReal(i, digits);
  acc -= harmonic_q(r - 1, digits) * gap;
  for (long j = 1; j <= rl - 1; ++j) acc += harmonic_q(j, digits) / j;
  for (long j = 1; j <= rl - 1; ++j) acc += harmonic_q(j - 1, digits) / (j + n);
  return acc;
}

namespace {

PrecReal t_integral_to(long n, int digits) {
  const QuadratureSpec spec = QuadratureSpec::semi_infinite(pow10(-(digits + 10), digits));
  const Integrand f = [n](const PrecReal& t) { return log_kernel_n(t, n); };
  return integrate_semi_infinite(f, PrecReal(0, digits), spec, kTwoPi);
}

PrecReal psi_over_pow_integral(long p, long n, int digits) {
  const Integrand f = [p](const PrecReal& x) {
    return specfun::digamma(x + 1) / pow(x, p);
  };
  const QuadratureSpec spec = QuadratureSpec::finite(pow10(-(digits + 8), digits));
  return integrate_finite(f, PrecReal(1, digits), PrecReal(n, digits), spec);
}

}  // namespace

PrecReal lemma_int_value(unsigned r, long n, int digits) {
  if (n < 2) throw DomainError("n must be at least 2");
  const PrecReal nn(n, digits);
  const PrecReal ln_n = log(nn);
  if (r == 0) return ln_n;
  const long rl = static_cast<long>(r);
  const PrecReal psi_r = specfun::digamma(PrecReal(rl, digits));
  const specfun::StirlingTable table(r);

  PrecReal acc = ln_n * ln_n / 2 - psi_r * ln_n;
  acc += specfun::rising_factorial(nn + 1, PrecReal(rl - 1, digits)) / pow(nn, rl);
  acc -= from_z(specfun::factorial(r), digits);
  acc += (rl + half(digits)) * (1 - 1 / nn);
  for (unsigned j = 0; j + 1 <= r; ++j) {
    const mpz_class& s = table.at(r, j);
    if (s == 0) continue;
    const long jl = static_cast<long>(j);
    const PrecReal brace =
        PrecReal(rl, digits) / (rl + 1 - jl) * (1 - 1 / pow(nn, rl + 1 - jl)) -
        psi_r / (rl - jl) * (1 - 1 / pow(nn, rl - jl));
    acc += from_z(s, digits) * brace;
  }
  acc -= t_integral_to(n, digits);
  for (unsigned j = 0; j + 1 <= r; ++j) {
    const mpz_class& s = table.at(r, j);
    if (s == 0) continue;
    acc += from_z(s, digits) * psi_over_pow_integral(rl + 1 - static_cast<long>(j), n, digits);
  }
  return acc;
}

PrecReal lemma_int_bar_value(unsigned r, long n, int digits) {
  if (n < 2) throw DomainError("n must be at least 2");
  const PrecReal nn(n, digits);
  const PrecReal ln_n = log(nn);
  if (r == 0) return ln_n;
  const long rl = static_cast<long>(r);
  const PrecReal psi_r = specfun::digamma(PrecReal(rl, digits));
  PrecReal acc = ln_n * ln_n / 2 - 1 / (2 * nn) + half(digits) - t_integral_to(n, digits);
  for (long j = 1; j <= rl - 1; ++j)
    acc += (ln_n + log(PrecReal(1 + j, digits)) - log(nn + j)) / j;
  acc -= psi_r * ln_n;
  return acc;
}

}  // namespace hypgamma::closedform
