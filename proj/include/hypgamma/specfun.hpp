#pragma once

#include <gmpxx.h>

#include <vector>

#include "hypgamma/real.hpp"

namespace hypgamma::specfun {

// Exact Bernoulli number B_n (B_1 = -1/2 convention). Cached.
mpq_class bernoulli(unsigned n);

mpz_class factorial(unsigned n);

// H_n and H_n^(m) as exact rationals; H_0 = 0 (empty sum).
mpq_class harmonic_exact(unsigned long n);
mpq_class harmonic_gen_exact(unsigned long n, unsigned m);
// Floating versions: plain left-to-right summation at the given precision
// (error bounded by n ulps, far below the guard digits for any n used here).
PrecReal harmonic(unsigned long n, int digits);
PrecReal harmonic_gen(unsigned long n, unsigned m, int digits);

/// Triangular table of unsigned Stirling numbers of the first kind,
/// coefficients of x^rising: x(x+1)...(x+r-1) = sum_j s[r][j] x^j.
/// Exact integers, immutable after construction.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_r);
  unsigned max_r() const { return max_r_; }
  const mpz_class& at(unsigned r, unsigned j) const;

 private:
  unsigned max_r_;
  std::vector<std::vector<mpz_class>> rows_;
};

const mpz_class& stirling1(unsigned r, unsigned j, const StirlingTable& table);

PrecReal gamma_fn(const PrecReal& x);
PrecReal log_gamma(const PrecReal& x);  // x > 0

/// Digamma: upward recurrence until the argument clears 10 + digits/3, then
/// the asymptotic series ln y - 1/(2y) - sum B_2k/(2k y^2k). Negative
/// non-integer arguments go through the reflection formula.
PrecReal digamma(const PrecReal& x);

/// x^rising(r) = Gamma(x+r)/Gamma(x); direct product when r is a small
/// non-negative integer.
PrecReal rising_factorial(const PrecReal& x, const PrecReal& r);

/// Riemann zeta for real s > 1: accelerated alternating eta series
/// (Chebyshev weights) for moderate s, direct tail summation once that is
/// cheaper. zeta_minus_one avoids the cancellation in zeta(s) - 1 for large
/// s; zeta_prime applies the same scheme to the term-wise derivative.
PrecReal zeta(const PrecReal& s);
PrecReal zeta_minus_one(const PrecReal& s);
PrecReal zeta_prime(const PrecReal& s);

// Cached integer-argument variants (the evaluation formulas hammer these).
PrecReal zeta_int(long s, int digits);
PrecReal zeta_minus_one_int(long s, int digits);
PrecReal zeta_prime_int(long s, int digits);

/// Euler-Mascheroni constant via H_n - ln n with Euler-Maclaurin
/// corrections, n picked from the precision. Cached per precision.
PrecReal euler_gamma(int digits);

/// First Stieltjes constant via its limit definition
/// lim (sum ln k/k - (ln n)^2/2) with Euler-Maclaurin corrections.
PrecReal stieltjes_gamma1(int digits);

}  // namespace hypgamma::specfun
