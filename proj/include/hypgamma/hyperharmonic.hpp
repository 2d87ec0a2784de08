#pragma once

#include <gmpxx.h>

#include <vector>

#include "hypgamma/real.hpp"

namespace hypgamma::hyperharmonic {

/// h_n^(r) by the recurrence h_n^(r) = sum_{k<=n} h_k^(r-1), h_n^(0) = 1/n.
/// Exact rationals.
mpq_class exact(unsigned long n, unsigned r);

/// h_1^(r) .. h_n^(r) of a single order, one prefix-summed row per order.
std::vector<mpq_class> exact_prefix(unsigned long n, unsigned r);

/// Real-argument extension h_x^(r) = x^rising(r) / (x Gamma(r)) *
/// (psi(x+r) - psi(r)) for x > 0, r > 0; the r = 0 branch is the resolved
/// limit 1/x and never evaluates Gamma(0) or psi(0).
PrecReal analytic(const PrecReal& x, const PrecReal& r);

/// h_x^(r)/x^r and h_x^(r)/x^rising(r). The rising form always uses the
/// cancelled expression (psi(x+r) - psi(r))/(x Gamma(r)).
PrecReal over_power(const PrecReal& x, const PrecReal& r);
PrecReal over_rising(const PrecReal& x, const PrecReal& r);

}  // namespace hypgamma::hyperharmonic
