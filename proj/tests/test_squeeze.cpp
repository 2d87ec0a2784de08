#include <doctest.h>

#include "hypgamma/hyperharmonic.hpp"
#include "hypgamma/specfun.hpp"
#include "hypgamma/squeeze.hpp"

using namespace hypgamma;
using squeeze::SequenceTrace;
using squeeze::Weighted;

namespace {

PrecReal q2p(const mpq_class& q, int d) { return PrecReal::from_rational(q.get_mpq_t(), d); }

}  // namespace

TEST_CASE("first elements of the four sequences") {
  const int d = 20;
  const PrecReal tol = default_quad_tol(d);
  for (const char* rs : {"0", "1", "2", "2.5", "6"}) {
    const PrecReal r = PrecReal::from_string(rs, d);
    CHECK(squeeze::seq_z(1, r, tol, d).is_zero());
    CHECK(squeeze::seq_a(1, r, tol, d).is_zero());
    CHECK(abs(squeeze::seq_y(1, r, tol, d) - 1) < pow10(-(d + 5), d));
    const PrecReal b1 = squeeze::seq_b(1, r, tol, d);
    CHECK(abs(b1 - 1 / specfun::gamma_fn(r + 1)) < pow10(-(d + 5), d));
  }
}

TEST_CASE("bound functions at r = 0 use the 1/x integrand") {
  const int d = 20;
  const PrecReal tol = default_quad_tol(d);
  const PrecReal zero(0, d);
  const PrecReal b = squeeze::bound_B(1, zero, tol, d);
  CHECK(abs(b - ln2(d)) < 2 * tol);
  CHECK(abs(squeeze::bound_A(1, zero, tol, d) - (1 - ln2(d))) < 2 * tol);
  CHECK(abs(squeeze::bound_D(1, zero, tol, d) - b) < 2 * tol);
}

TEST_CASE("bound D at r=2, n=3 against a tighter quadrature of the cancelled form") {
  const int d = 20;
  const PrecReal tol = pow10(-(d + 2), d);
  const PrecReal got = squeeze::bound_D(3, PrecReal(2, d), tol, d);
  const PrecReal psi2 = specfun::digamma(PrecReal(2, d));
  const Integrand f = [&psi2](const PrecReal& x) {
    return (specfun::digamma(x + 2) - psi2) / x;
  };
  const PrecReal oracle = integrate_finite(f, PrecReal(3, d), PrecReal(4, d),
                                           QuadratureSpec::finite(tol / 10));
  CHECK(abs(got - oracle) < 3 * tol);
}

TEST_CASE("trace matches a from-scratch evaluation of the definitions") {
  const int d = 20;
  const PrecReal tol = default_quad_tol(d);
  for (Flavor flavor : {Flavor::power, Flavor::rising}) {
    const PrecReal r(2, d);
    SequenceTrace trace(flavor, r, 30, tol, d);
    const Weighted f(flavor, r, d);
    const Integrand fn = [&f](const PrecReal& x) { return f(x); };
    for (long n : {1L, 7L, 30L}) {
      PrecReal sum(0, d);
      for (long k = 1; k <= n; ++k) sum += f.term(k);
      PrecReal integral(0, d);
      if (n > 1)
        integral = integrate_finite(fn, PrecReal(1, d), PrecReal(n, d),
                                    QuadratureSpec::finite(tol));
      CHECK(abs(trace.upper(n) - (sum - integral)) < 4 * tol);
      CHECK(abs(trace.lower(n) - (sum - f.term(n) - integral)) < 4 * tol);
    }
  }
}

TEST_CASE("serial reference and parallel kernel are bit-identical") {
  const int d = 15;
  const PrecReal tol = default_quad_tol(d);
  for (Flavor flavor : {Flavor::power, Flavor::rising}) {
    const PrecReal r = PrecReal::from_string("2.5", d);
    SequenceTrace serial(flavor, r, 80, tol, d, Exec::serial);
    SequenceTrace parallel(flavor, r, 80, tol, d, Exec::parallel);
    for (long n = 1; n <= 80; ++n) {
      CHECK(serial.upper(n).to_string() == parallel.upper(n).to_string());
      CHECK(serial.lower(n).to_string() == parallel.lower(n).to_string());
    }
    CHECK(serial.term(81).to_string() == parallel.term(81).to_string());
  }
}

TEST_CASE("width identity against exact rationals") {
  const int d = 20;
  const PrecReal tol = default_quad_tol(d);
  for (unsigned r : {0u, 1u, 3u}) {
    SequenceTrace trace(Flavor::power, PrecReal(r, d), 50, tol, d);
    SequenceTrace rtrace(Flavor::rising, PrecReal(r, d), 50, tol, d);
    const auto row = hyperharmonic::exact_prefix(50, r);
    for (long n = 1; n <= 50; ++n) {
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n), r);
      mpz_class rising = 1;
      for (unsigned i = 0; i < r; ++i) rising *= (n + i);
      CHECK(abs(trace.upper(n) - trace.lower(n) - q2p(row[n - 1] / mpq_class(pw), d)) <
            2 * tol);
      CHECK(abs(rtrace.upper(n) - rtrace.lower(n) - q2p(row[n - 1] / mpq_class(rising), d)) <
            2 * tol);
    }
  }
}

TEST_CASE("monotone chains on a short range") {
  const int d = 15;
  const PrecReal tol = default_quad_tol(d);
  const PrecReal slack = 4 * tol;
  for (Flavor flavor : {Flavor::power, Flavor::rising}) {
    for (const char* rs : {"0", "0.5", "2"}) {
      const PrecReal r = PrecReal::from_string(rs, d);
      SequenceTrace trace(flavor, r, 61, tol, d);
      const PrecReal cap =
          flavor == Flavor::power ? PrecReal(1, d) : 1 / specfun::gamma_fn(r + 1);
      for (long n = 1; n <= 60; ++n) {
        CHECK(trace.lower(n) < trace.lower(n + 1) + slack);
        CHECK(trace.upper(n + 1) < trace.upper(n) + slack);
        CHECK(trace.lower(n + 1) < trace.upper(n + 1) + slack);
        CHECK(trace.lower(n) >= -slack);
        CHECK(trace.upper(n) <= cap + slack);
      }
    }
  }
}

TEST_CASE("brackets contain the published 10-digit constants") {
  const int d = 15;
  const PrecReal tol = default_quad_tol(d);
  {
    const Bracket b =
        squeeze::squeeze_estimate(Flavor::power, PrecReal(0, d), 3000, tol, d);
    const PrecReal g = PrecReal::from_string("0.5772156649", d);
    CHECK(b.lower < g);
    CHECK(g < b.upper);
    // width at r = 0 is h_n^(0)/n^0 = 1/n
    CHECK(abs(b.upper - b.lower - PrecReal(1, d) / 3000) < 2 * tol);
  }
  {
    const Bracket b =
        squeeze::squeeze_estimate(Flavor::rising, PrecReal(4, d), 1000, tol, d);
    const PrecReal v = PrecReal::from_string("0.0212306528", d);
    CHECK(b.lower < v);
    CHECK(v < b.upper);
  }
}

TEST_CASE("refined enclosures") {
  const int d = 15;
  const PrecReal tol = default_quad_tol(d);
  {
    SequenceTrace trace(Flavor::power, PrecReal(0, d), 1000, tol, d);
    const auto [lo, hi] = trace.refined(1000);
    // enclosure width is h_{n+1}^(0)/(n+1)^0 = 1/(n+1)
    CHECK(abs(hi - lo - PrecReal(1, d) / 1001) < 4 * tol);
    const PrecReal g = specfun::euler_gamma(d);
    CHECK(lo < g);
    CHECK(g < hi);
  }
  {
    const auto [lo, hi] =
        squeeze::refined_estimate(Flavor::power, PrecReal(1, d), 1000, tol, d);
    const PrecReal v = PrecReal::from_string("0.5290529699", d);
    CHECK(lo < v);
    CHECK(v < hi);
  }
  {
    const auto [lo, hi] =
        squeeze::refined_estimate(Flavor::rising, PrecReal(2, d), 500, tol, d);
    const PrecReal v = PrecReal::from_string("0.2586901244", d);
    CHECK(lo < v);
    CHECK(v < hi);
  }
}

TEST_CASE("constructor validation") {
  const int d = 15;
  CHECK_THROWS_AS(SequenceTrace(Flavor::power, PrecReal(1, d), 0, default_quad_tol(d), d),
                  DomainError);
  CHECK_THROWS_AS(SequenceTrace(Flavor::power, PrecReal(1, d), 10, PrecReal(0, d), d),
                  DomainError);
  CHECK_THROWS_AS(SequenceTrace(Flavor::power, PrecReal(-1, d), 10, default_quad_tol(d), d),
                  DomainError);
  SequenceTrace t(Flavor::power, PrecReal(1, d), 5, default_quad_tol(d), d);
  CHECK_THROWS_AS(t.upper(6), DomainError);
  CHECK_THROWS_AS(t.lower(0), DomainError);
}
