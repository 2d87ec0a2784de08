#include "hypgamma/specfun.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace hypgamma::specfun {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<mpq_class>& bernoulli_cache() {
  static std::vector<mpq_class> cache{mpq_class(1)};
  return cache;
}

}  // namespace

mpq_class bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  auto& cache = bernoulli_cache();
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    mpz_class binom = 1;
    mpq_class acc = 0;
    for (unsigned j = 0; j < m; ++j) {
      acc += mpq_class(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    acc /= -static_cast<long>(m + 1);
    cache.push_back(acc);
  }
  return cache[n];
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpq_class harmonic_exact(unsigned long n) {
  mpq_class acc = 0;
  for (unsigned long k = 1; k <= n; ++k) acc += mpq_class(1, k);
  return acc;
}

mpq_class harmonic_gen_exact(unsigned long n, unsigned m) {
  mpq_class acc = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), k, m);
    acc += mpq_class(1) / mpq_class(p);
  }
  return acc;
}

PrecReal harmonic(unsigned long n, int digits) {
  PrecReal acc(0, digits);
  for (unsigned long k = 1; k <= n; ++k) acc += 1 / PrecReal(static_cast<long>(k), digits);
  return acc;
}

PrecReal harmonic_gen(unsigned long n, unsigned m, int digits) {
  PrecReal acc(0, digits);
  for (unsigned long k = 1; k <= n; ++k)
    acc += 1 / pow(PrecReal(static_cast<long>(k), digits), static_cast<long>(m));
  return acc;
}

StirlingTable::StirlingTable(unsigned max_r) : max_r_(max_r) {
  rows_.resize(max_r + 1);
  rows_[0] = {mpz_class(1)};
  for (unsigned r = 1; r <= max_r; ++r) {
    rows_[r].assign(r + 1, mpz_class(0));
    for (unsigned j = 1; j <= r; ++j) {
      const mpz_class& upper_left = rows_[r - 1][j - 1];
      const mpz_class upper = (j < r) ? rows_[r - 1][j] : mpz_class(0);
      rows_[r][j] = upper_left + static_cast<long>(r - 1) * upper;
    }
  }
}

const mpz_class& StirlingTable::at(unsigned r, unsigned j) const {
  if (r > max_r_ || j > r) throw DomainError("stirling index out of range");
  return rows_[r][j];
}

const mpz_class& stirling1(unsigned r, unsigned j, const StirlingTable& table) {
  return table.at(r, j);
}

namespace {

bool is_nonpositive_integer(const PrecReal& x) {
  return x <= 0 && x.is_integer();
}

long asym_threshold(int digits) { return 10 + digits / 3; }

// Coefficients B_2k/(2k) of the digamma asymptotic series, converted once
// per precision. The length covers the worst case (argument exactly at the
// recurrence threshold).
std::shared_ptr<const std::vector<PrecReal>> asym_coefficients(int digits) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const std::vector<PrecReal>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(digits);
  if (it != cache.end()) return it->second;

  const double x0 = static_cast<double>(asym_threshold(digits));
  const double target = -(digits + kGuardDigits) * std::log(10.0);
  const long k_cap = static_cast<long>(M_PI * x0) + 2;
  long terms = k_cap;
  for (long k = 1; k <= k_cap; ++k) {
    const double log_term = 2.0 * k * std::log(k / (M_PI * M_E * x0)) +
                            0.5 * std::log(4.0 * M_PI * k) - std::log(static_cast<double>(k));
    if (log_term < target) {
      terms = k + 2;
      break;
    }
  }
  auto coeffs = std::make_shared<std::vector<PrecReal>>();
  coeffs->reserve(terms);
  for (long k = 1; k <= terms; ++k) {
    mpq_class c = bernoulli(static_cast<unsigned>(2 * k)) / (2 * k);
    coeffs->push_back(PrecReal::from_rational(c.get_mpq_t(), digits));
  }
  cache.emplace(digits, coeffs);
  return coeffs;
}

// ln y - 1/(2y) - sum_k B_2k/(2k y^2k) for y at or beyond the threshold.
PrecReal digamma_asymptotic(const PrecReal& y, int digits) {
  auto coeffs = asym_coefficients(digits);
  PrecReal res = log(y) - 1 / (2 * y);
  const PrecReal u = 1 / (y * y);
  PrecReal p = u;
  const PrecReal eps = pow10(-(digits + kGuardDigits - 2), digits);
  for (const PrecReal& c : *coeffs) {
    const PrecReal t = c * p;
    res -= t;
    if (abs(t) < eps) break;
    p *= u;
  }
  return res;
}

}  // namespace

PrecReal gamma_fn(const PrecReal& x) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma pole at non-positive integer");
  PrecReal r(0, x.digits());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal log_gamma(const PrecReal& x) {
  if (!(x > 0)) throw DomainError("log_gamma requires a positive argument");
  PrecReal r(0, x.digits());
  mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

PrecReal digamma(const PrecReal& x) {
  const int digits = x.digits();
  if (is_nonpositive_integer(x)) throw PoleError("digamma pole at non-positive integer");
  if (x < 0) {
    // psi(x) = psi(1-x) - pi*cot(pi*x)
    const PrecReal px = pi(digits) * x;
    return digamma(1 - x) - pi(digits) * cos(px) / sin(px);
  }
  const long threshold = asym_threshold(digits);
  if (x >= threshold) return digamma_asymptotic(x, digits);
  PrecReal floor_x(0, digits);
  mpfr_floor(floor_x.raw(), x.raw());
  const long shift = threshold - floor_x.to_long();
  PrecReal acc(0, digits);
  for (long i = 0; i < shift; ++i) acc += 1 / (x + i);
  return digamma_asymptotic(x + shift, digits) - acc;
}

PrecReal rising_factorial(const PrecReal& x, const PrecReal& r) {
  const int digits = std::max(x.digits(), r.digits());
  if (is_nonpositive_integer(x) || is_nonpositive_integer(x + r))
    throw PoleError("rising factorial pole");
  if (r.is_integer() && r >= 0 && r <= 256) {
    const long n = r.to_long();
    PrecReal acc(1, digits);
    for (long i = 0; i < n; ++i) acc *= (x + i);
    return acc;
  }
  return gamma_fn((x + r).with_digits(digits)) / gamma_fn(x.with_digits(digits));
}

namespace {

// d_0..d_n of the Chebyshev-weighted alternating-series acceleration.
std::shared_ptr<const std::vector<mpq_class>> acceleration_weights(long n) {
  static std::mutex mutex;
  static std::map<long, std::shared_ptr<const std::vector<mpq_class>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto d = std::make_shared<std::vector<mpq_class>>();
  d->reserve(n + 1);
  mpq_class e(1, n);  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
  mpq_class acc = e;
  d->push_back(n * acc);
  for (long i = 1; i <= n; ++i) {
    mpq_class ratio(4 * (n + i - 1) * (n - i + 1), (2 * i) * (2 * i - 1));
    ratio.canonicalize();
    e *= ratio;
    acc += e;
    d->push_back(n * acc);
  }
  cache.emplace(n, d);
  return d;
}

long acceleration_terms(int digits, double s) {
  const double D = digits + kGuardDigits + 2;
  double penalty = 0.0;
  const double q = 1.0 - std::pow(2.0, 1.0 - s);
  if (q < 1.0) penalty = -std::log10(q);
  // ln(3 + sqrt 8) = 1.7627...
  return static_cast<long>(std::ceil((D + penalty) * 2.302585092994046 / 1.762747174)) + 5;
}

// Number of direct-summation terms for a tail below 10^-(digits+margin);
// LONG_MAX-ish sentinel when direct summation is hopeless.
long direct_terms(double s, int digits) {
  const double D = digits + kGuardDigits + 2;
  if (s < 5.0) return std::numeric_limits<long>::max();
  const double expo = (D - std::log10(s - 1.0)) / (s - 1.0);
  if (expo > 6.0) return std::numeric_limits<long>::max();
  return static_cast<long>(std::ceil(std::pow(10.0, expo))) + 2;
}

PrecReal zeta_tail_direct(const PrecReal& s, long m) {
  const int digits = s.digits();
  const PrecReal neg_s = -s;
  PrecReal acc(0, digits);
  for (long j = 2; j <= m; ++j) acc += pow(PrecReal(j, digits), neg_s);
  return acc;
}

PrecReal eta_accelerated(const PrecReal& s, long n, bool log_weight) {
  const int digits = s.digits();
  auto d = acceleration_weights(n);
  const PrecReal dn = PrecReal::from_rational(d->back().get_mpq_t(), digits);
  const PrecReal neg_s = -s;
  PrecReal acc(0, digits);
  for (long k = 0; k < n; ++k) {
    mpq_class w = d->back() - (*d)[k];
    PrecReal term = PrecReal::from_rational(w.get_mpq_t(), digits) *
                    pow(PrecReal(k + 1, digits), neg_s);
    if (log_weight) {
      if (k == 0) continue;
      term *= log(PrecReal(k + 1, digits));
    }
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc / dn;
}

PrecReal two_pow_one_minus(const PrecReal& s) {
  return pow(PrecReal(2, s.digits()), 1 - s);
}

}  // namespace

PrecReal zeta(const PrecReal& s) {
  if (!(s > 1)) throw DomainError("zeta requires s > 1");
  const int digits = s.digits();
  const double sd = s.to_double();
  const long m = direct_terms(sd, digits);
  if (m <= 2 * acceleration_terms(digits, sd))
    return 1 + zeta_tail_direct(s, m);
  const long n = acceleration_terms(digits, sd);
  const PrecReal eta = eta_accelerated(s, n, false);
  return eta / (1 - two_pow_one_minus(s));
}

PrecReal zeta_minus_one(const PrecReal& s) {
  if (!(s > 1)) throw DomainError("zeta requires s > 1");
  const int digits = s.digits();
  const double sd = s.to_double();
  const long m = direct_terms(sd, digits);
  if (m <= 2 * acceleration_terms(digits, sd)) return zeta_tail_direct(s, m);
  return zeta(s) - 1;
}

PrecReal zeta_prime(const PrecReal& s) {
  if (!(s > 1)) throw DomainError("zeta_prime requires s > 1");
  const int digits = s.digits();
  const double sd = s.to_double();
  long m = direct_terms(sd, digits);
  if (m != std::numeric_limits<long>::max()) m += 8;
  if (m <= 2 * acceleration_terms(digits, sd)) {
    const PrecReal neg_s = -s;
    PrecReal acc(0, digits);
    for (long j = 2; j <= m; ++j)
      acc += log(PrecReal(j, digits)) * pow(PrecReal(j, digits), neg_s);
    return -acc;
  }
  const long n = acceleration_terms(digits, sd) + 8;
  // eta'(s) = -sum (-1)^k w_k ln(k+1)/(k+1)^s, accelerated with the same
  // weights; zeta' = (eta' - ln2 2^(1-s) zeta)/(1 - 2^(1-s)).
  const PrecReal etap = -eta_accelerated(s, n, true);
  const PrecReal z = zeta(s);
  const PrecReal t = two_pow_one_minus(s);
  return (etap - ln2(digits) * t * z) / (1 - t);
}

namespace {

template <class Fn>
PrecReal cached_by_arg(long s, int digits, std::map<std::pair<long, int>, PrecReal>& cache,
                       std::mutex& mutex, const Fn& compute) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({s, digits});
    if (it != cache.end()) return it->second;
  }
  PrecReal value = compute();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(s, digits), std::move(value)).first->second;
}

}  // namespace

PrecReal zeta_int(long s, int digits) {
  static std::map<std::pair<long, int>, PrecReal> cache;
  static std::mutex mutex;
  return cached_by_arg(s, digits, cache, mutex, [&] { return zeta(PrecReal(s, digits)); });
}

PrecReal zeta_minus_one_int(long s, int digits) {
  static std::map<std::pair<long, int>, PrecReal> cache;
  static std::mutex mutex;
  return cached_by_arg(s, digits, cache, mutex,
                       [&] { return zeta_minus_one(PrecReal(s, digits)); });
}

PrecReal zeta_prime_int(long s, int digits) {
  static std::map<std::pair<long, int>, PrecReal> cache;
  static std::mutex mutex;
  return cached_by_arg(s, digits, cache, mutex,
                       [&] { return zeta_prime(PrecReal(s, digits)); });
}

PrecReal euler_gamma(int digits) {
  static std::map<std::pair<long, int>, PrecReal> cache;
  static std::mutex mutex;
  return cached_by_arg(0, digits, cache, mutex, [&] {
    const long n = std::max(asym_threshold(digits),
                            static_cast<long>(std::ceil(0.37 * (digits + kGuardDigits + 3))) + 4);
    const mpq_class hn = harmonic_exact(static_cast<unsigned long>(n));
    const PrecReal nn(n, digits);
    PrecReal res = PrecReal::from_rational(hn.get_mpq_t(), digits) - log(nn) - 1 / (2 * nn);
    const PrecReal u = 1 / (nn * nn);
    PrecReal p = u;
    const PrecReal eps = pow10(-(digits + kGuardDigits - 2), digits);
    auto coeffs = asym_coefficients(digits);
    for (const PrecReal& c : *coeffs) {
      const PrecReal t = c * p;
      res += t;
      if (abs(t) < eps) break;
      p *= u;
    }
    return res;
  });
}

PrecReal stieltjes_gamma1(int digits) {
  static std::map<std::pair<long, int>, PrecReal> cache;
  static std::mutex mutex;
  return cached_by_arg(0, digits, cache, mutex, [&] {
    const long n = std::max(asym_threshold(digits),
                            static_cast<long>(std::ceil(0.37 * (digits + kGuardDigits + 3))) + 4);
    const PrecReal nn(n, digits);
    const PrecReal ln_n = log(nn);
    PrecReal res(0, digits);
    for (long k = 2; k <= n; ++k) {
      const PrecReal kk(k, digits);
      res += log(kk) / kk;
    }
    res -= ln_n * ln_n / 2;
    res -= ln_n / (2 * nn);
    // + sum_j B_2j/(2j) (ln n - H_{2j-1}) / n^2j
    const PrecReal u = 1 / (nn * nn);
    PrecReal p = u;
    const PrecReal eps = pow10(-(digits + kGuardDigits - 2), digits);
    auto coeffs = asym_coefficients(digits);
    for (size_t k = 0; k < coeffs->size(); ++k) {
      const long j = static_cast<long>(k) + 1;
      const mpq_class h = harmonic_exact(static_cast<unsigned long>(2 * j - 1));
      const PrecReal t =
          (*coeffs)[k] * (ln_n - PrecReal::from_rational(h.get_mpq_t(), digits)) * p;
      res += t;
      if (abs(t) < eps) break;
      p *= u;
    }
    return res;
  });
}

}  // namespace hypgamma::specfun
