#include <doctest.h>

#include <vector>

#include "hypgamma/quadrature.hpp"
#include "hypgamma/specfun.hpp"

using namespace hypgamma;

namespace {

PrecReal tol(int e, int digits) { return pow10(-e, digits); }

}  // namespace

TEST_CASE("finite quadrature on integrands with closed forms") {
  const int d = 25;
  const QuadratureSpec spec = QuadratureSpec::finite(tol(20, d));

  const PrecReal inv = integrate_finite([](const PrecReal& x) { return 1 / x; },
                                        PrecReal(1, d), exp(PrecReal(1, d)), spec);
  CHECK(abs(inv - 1) < 2 * spec.abs_tol);

  const PrecReal sq = integrate_finite([](const PrecReal& x) { return x * x; },
                                       PrecReal(0, d), PrecReal(1, d), spec);
  CHECK(abs(sq - PrecReal(1, d) / 3) < 2 * spec.abs_tol);

  const PrecReal s = integrate_finite([](const PrecReal& x) { return sin(x); },
                                      PrecReal(0, d), pi(d), spec);
  CHECK(abs(s - 2) < 2 * spec.abs_tol);

  const PrecReal lg = integrate_finite([](const PrecReal& x) { return log(x); },
                                       PrecReal(1, d), PrecReal(2, d), spec);
  CHECK(abs(lg - (2 * ln2(d) - 1)) < 2 * spec.abs_tol);
}

TEST_CASE("digamma integrand agrees with a composite Simpson oracle") {
  const int d = 25;
  const Integrand f = [](const PrecReal& x) {
    return specfun::digamma(x + 1) / (x * x);
  };
  const PrecReal q =
      integrate_finite(f, PrecReal(1, d), PrecReal(100, d), QuadratureSpec::finite(tol(8, d)));

  const long panels = 20000;  // comfortably 10x the adaptive grid
  const PrecReal h = PrecReal(99, d) / panels;
  PrecReal acc = f(PrecReal(1, d)) + f(PrecReal(100, d));
  for (long i = 1; i < panels; ++i)
    acc += (i % 2 == 1 ? 4 : 2) * f(PrecReal(1, d) + i * h);
  const PrecReal simpson = acc * h / 3;
  CHECK(abs(q - simpson) < tol(7, d));
}

TEST_CASE("semi-infinite quadrature with exponential decay") {
  const int d = 22;
  const QuadratureSpec spec = QuadratureSpec::semi_infinite(tol(18, d));

  const PrecReal e1 = integrate_semi_infinite([](const PrecReal& t) { return exp(-t); },
                                              PrecReal(0, d), spec, 1.0);
  CHECK(abs(e1 - 1) < 2 * spec.abs_tol);

  const PrecReal g = integrate_semi_infinite(
      [d](const PrecReal& t) { return t * exp(-2 * pi(d) * t); }, PrecReal(0, d), spec,
      6.283185307179586);
  CHECK(abs(g - 1 / (4 * pi(d) * pi(d))) < 2 * spec.abs_tol);
}

TEST_CASE("identical inputs give identical digit strings") {
  const int d = 20;
  const QuadratureSpec spec = QuadratureSpec::finite(tol(15, d));
  const Integrand f = [](const PrecReal& x) { return exp(-x * x); };
  const PrecReal a = integrate_finite(f, PrecReal(0, d), PrecReal(2, d), spec);
  const PrecReal b = integrate_finite(f, PrecReal(0, d), PrecReal(2, d), spec);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("tighter tolerance and higher precision never lose accuracy") {
  struct Setup {
    int digits;
    int tol_exp;
  };
  const std::vector<Setup> setups = {{15, 12}, {25, 20}, {40, 33}};
  PrecReal prev_err(1, 50);
  for (const auto& s : setups) {
    const PrecReal q = integrate_finite([](const PrecReal& x) { return 1 / x; },
                                        PrecReal(1, s.digits), exp(PrecReal(1, s.digits)),
                                        QuadratureSpec::finite(tol(s.tol_exp, s.digits)));
    const PrecReal err = abs(q - 1).with_digits(50);
    // never worse than the previous setup, up to the new setup's own
    // rounding floor (a lucky exact hit at a coarser setup is not a loss)
    CHECK(err <= max(prev_err, tol(s.digits + 13, 50)));
    prev_err = err;
  }
}

TEST_CASE("error paths") {
  const int d = 20;
  const QuadratureSpec spec = QuadratureSpec::finite(tol(15, d));
  const Integrand f = [](const PrecReal& x) { return x; };
  CHECK_THROWS_AS(integrate_finite(f, PrecReal(2, d), PrecReal(1, d), spec), DomainError);
  CHECK_THROWS_AS(integrate_finite(f, PrecReal(1, d), PrecReal(1, d), spec), DomainError);
  CHECK_THROWS_AS(integrate_finite(f, PrecReal(0, d), PrecReal(1, d),
                                   QuadratureSpec::finite(PrecReal(0, d))),
                  DomainError);
  CHECK_THROWS_AS(
      integrate_finite(f, PrecReal(0, d), PrecReal(1, d), QuadratureSpec::finite(tol(15, d), 0)),
      DomainError);

  // square-root kink: refinement limit is reached before the tolerance
  CHECK_THROWS_AS(integrate_finite([](const PrecReal& x) { return sqrt(x); }, PrecReal(0, 25),
                                   PrecReal(1, 25), QuadratureSpec::finite(tol(22, 25), 8)),
                  ToleranceError);

  // harmonic decay violates the exponential-tail assumption
  CHECK_THROWS_AS(
      integrate_semi_infinite([](const PrecReal& t) { return 1 / (1 + t); }, PrecReal(0, d),
                              QuadratureSpec::semi_infinite(tol(10, d)), 1.0),
      DecayError);
}
