#pragma once

#include <functional>

#include "hypgamma/real.hpp"

namespace hypgamma {

struct QuadratureSpec {
  enum class Kind { finite_adaptive, semi_infinite };

  Kind kind = Kind::finite_adaptive;
  PrecReal abs_tol;
  int max_refinements = 40;

  static QuadratureSpec finite(const PrecReal& abs_tol, int max_refinements = 40) {
    return {Kind::finite_adaptive, abs_tol, max_refinements};
  }
  static QuadratureSpec semi_infinite(const PrecReal& abs_tol, int max_refinements = 40) {
    return {Kind::semi_infinite, abs_tol, max_refinements};
  }
};

using Integrand = std::function<PrecReal(const PrecReal&)>;

/// Adaptive panel subdivision with a fixed Gauss-Legendre pair per panel
/// (order scales with the working precision). A panel is accepted when the
/// coarse/fine disagreement is below its share of abs_tol, otherwise it is
/// bisected; panel error shares sum to abs_tol. Throws DomainError on
/// lo >= hi, ToleranceError once max_refinements bisection levels are spent.
PrecReal integrate_finite(const Integrand& f, const PrecReal& lo, const PrecReal& hi,
                          const QuadratureSpec& spec);

/// Integral over [lo, inf) of an integrand bounded by C*exp(-decay_rate*t).
/// C is estimated from samples, the tail is cut at T with C*exp(-a*T)/a below
/// abs_tol/10, and [lo, T] goes through integrate_finite with the remaining
/// budget. Throws DecayError when the tail bound keeps growing instead.
PrecReal integrate_semi_infinite(const Integrand& f, const PrecReal& lo,
                                 const QuadratureSpec& spec, double decay_rate = 1.0);

}  // namespace hypgamma
