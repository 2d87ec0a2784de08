#pragma once

#include "hypgamma/real.hpp"
#include "hypgamma/squeeze.hpp"

namespace hypgamma {

enum class Method { closed, squeeze, both };

struct ConstantResult {
  Flavor flavor = Flavor::power;
  unsigned r = 0;
  PrecReal value;
  Method method = Method::closed;
  PrecReal est_error;
  int precision_digits = kDefaultDigits;
};

namespace closedform {

/// sigma_p = sum_k (-1)^(k-1) zeta(p+k)/k, evaluated through the
/// accelerated split ln 2 + sum (-1)^(k-1)(zeta(p+k)-1)/k.
PrecReal sigma_p(unsigned p, int digits);

/// sum_{k>=1} ln(k+1)/k^p = sigma_p - zeta'(p), p >= 2.
PrecReal log_zeta_sum(unsigned p, int digits);

/// Integrand ln(1+t^2)/((e^(2 pi t) - 1) t); the removable singularity at
/// t = 0 is evaluated by the product of the two local series.
PrecReal log_kernel(const PrecReal& t);
/// Finite-n variant with ln(1+t^2) - ln(1+(t/n)^2) in the numerator.
PrecReal log_kernel_n(const PrecReal& t, long n);

/// J = integral over [0, inf) of log_kernel. Cached per precision.
PrecReal j_integral(int digits);

/// integral over [1, inf) of psi(x+1)/x^p, p >= 2, via
/// -gamma/(p-1) + (-1)^p (sigma_p - zeta'(p))
///   + sum_{j=2}^{p-1} (-1)^(p-1-j) zeta(p+1-j)/(j-1).
PrecReal psi_integral(unsigned p, int digits);

/// Upper limit of the trailing sum in the Euler-sum evaluation formula.
/// The direct-summation oracle fixes `shifted` (sum to r-1) as the correct
/// reading; `printed` (sum to r) is retained for audit and differs by
/// exactly H_r/r^p.
enum class TrailingSumLimit { shifted, printed };

/// sum_{n=r}^inf H_n/(n+1-r)^p in closed form, p >= 2, r >= 1.
PrecReal euler_sum_h(unsigned p, unsigned r, int digits, TrailingSumLimit limit = TrailingSumLimit::shifted);

/// E(r, j) = euler_sum_h(r+1-j, r) - psi_integral(r+1-j), 1 <= j <= r-1.
PrecReal e_term(unsigned r, unsigned j, int digits);

/// gamma_h(r): the limit of y_n(r)/z_n(r), from the evaluation formula
/// Gamma(r) gamma_h(r) = gamma^2/2 + zeta(2)/2 - 1/2 + J - (psi(r)+gamma) gamma
///   + r! - r + sum H_j/j + sum s[r][j] (E(r,j) + psi(r)/(r-j) - r/(r+1-j)
///   - H_{r-1} zeta(r+1-j));
/// r = 0 collapses to the Euler-Mascheroni constant.
ConstantResult gamma_h(unsigned r, int digits);

/// Same constant through the expanded form (zeta products, sigma and zeta'
/// terms); internal cross-check of gamma_h, r >= 1.
PrecReal gamma_h_alt(unsigned r, int digits);

/// gamma_h_bar(r) = (gamma_h(1) - (psi(r)+gamma) gamma
///   + sum_{j<r} (H_j - ln(1+j))/j) / Gamma(r); r = 0 gives gamma.
ConstantResult gamma_h_bar(unsigned r, int digits);

/// Right-hand sides of the finite-n identities for
/// Gamma(r) sum_{k<=n} h_k^(r)/k^r and Gamma(r) sum_{k<=n} h_k^(r)/k^rising.
/// At r = 0 the Gamma factor diverges and the direct sum H_n is returned.
PrecReal lemma_top_sum(unsigned r, long n, int digits);
PrecReal lemma_top_bar_sum(unsigned r, long n, int digits);

/// Right-hand sides of the finite-n identities for
/// Gamma(r) integral_1^n h_x^(r)/x^r dx (and the rising analogue), with the
/// t-integral evaluated by the semi-infinite quadrature. At r = 0 the direct
/// value ln n is returned.
PrecReal lemma_int_value(unsigned r, long n, int digits);
PrecReal lemma_int_bar_value(unsigned r, long n, int digits);

}  // namespace closedform
}  // namespace hypgamma
