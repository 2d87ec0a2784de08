// Acceptance gate: runs every top-level requirement at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "hypgamma/closedform.hpp"
#include "hypgamma/quadrature.hpp"
#include "hypgamma/specfun.hpp"
#include "hypgamma/squeeze.hpp"
#include "hypgamma/verify.hpp"

using namespace hypgamma;
namespace cf = hypgamma::closedform;
namespace sf = hypgamma::specfun;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

// 10-digit reference table, both weights, r = 0..9.
const char* kPowerRef[] = {"0.5772156649", "0.5290529699", "0.5551960549", "0.5978616743",
                           "0.6439018350", "0.6881913208", "0.7284308281", "0.7637312448",
                           "0.7939960448", "0.8195630509"};
const char* kRisingRef[] = {"0.5772156649",   "0.5290529699",   "0.2586901244",
                            "0.08538807383",  "0.02123065279",  "0.004231410657",
                            "0.000703545796", "0.000100330361", "1.252451689e-5",
                            "1.390145776e-6"};

// 5 units in the k-th significant digit of the reference value.
PrecReal sig_digit_tol(const PrecReal& ref, int k, int digits) {
  const std::string s = ref.to_string(1);  // "d e+xx"
  const int exp10 = std::atoi(s.c_str() + s.find('e') + 1);
  return 5 * pow10(exp10 - (k - 1), digits);
}

Criterion criterion_table() {
  Criterion c{"table reproduction at 15 digits vs the 10-digit reference values", true, ""};
  const int d = 15;
  double worst = 0.0;
  std::ostringstream fails;
  for (unsigned r = 0; r <= 9; ++r) {
    const PrecReal ref_p = PrecReal::from_string(kPowerRef[r], d);
    const PrecReal got_p = cf::gamma_h(r, d).value;
    const double resid_p = abs(got_p - ref_p).to_double();
    worst = std::max(worst, resid_p);
    if (!(abs(got_p - ref_p) < PrecReal::from_string("5e-10", d))) {
      c.pass = false;
      fails << " power r=" << r << " resid=" << sci(resid_p) << ";";
    }
    const PrecReal ref_b = PrecReal::from_string(kRisingRef[r], d);
    const PrecReal got_b = cf::gamma_h_bar(r, d).value;
    if (!(abs(got_b - ref_b) < sig_digit_tol(ref_b, 10, d))) {
      c.pass = false;
      fails << " rising r=" << r << " resid=" << sci(abs(got_b - ref_b).to_double()) << ";";
    }
  }
  c.detail = c.pass ? "all 20 entries within tolerance, max abs residual " + sci(worst)
                    : "failing rows:" + fails.str();
  return c;
}

// Supplementary evidence for the table criterion: the two closed-form routes
// and an extrapolation of the defining limit agree far below the reference
// table's own resolution.
Criterion route_consistency() {
  Criterion c{"supplementary three-route consistency of the power-weight values", true, ""};
  const int d = 30;
  double worst = 0.0;
  for (unsigned r : {2u, 3u, 4u}) {
    const PrecReal closed = cf::gamma_h(r, d).value;
    const double alt_resid = abs(closed - cf::gamma_h_alt(r, d)).to_double();

    const long n = 1000;
    const squeeze::Weighted f(Flavor::power, PrecReal(r, d), d);
    PrecReal sum(0, d);
    for (long k = 1; k <= n; ++k) sum += f.term(k);
    const Integrand fn = [&f](const PrecReal& x) { return f(x); };
    const PrecReal integral = integrate_finite(fn, PrecReal(1, d), PrecReal(n, d),
                                               QuadratureSpec::finite(pow10(-(d + 5), d)));
    const PrecReal h = pow10(-4, d);
    const PrecReal nn(n, d);
    const PrecReal deriv = (f(nn + h) - f(nn - h)) / (2 * h);
    const PrecReal em = sum - integral - f.term(n) / 2 - deriv / 12;
    const double em_resid = abs(closed - em).to_double();
    worst = std::max({worst, alt_resid, em_resid});
    if (alt_resid > 1e-20 || em_resid > 1e-11) c.pass = false;
  }
  c.detail = "max disagreement " + sci(worst) +
             " (closed vs expanded vs defining-limit extrapolation)";
  return c;
}

Criterion from_suite(const std::string& name, const std::string& suite,
                     const verify::Options& opts, double threshold, bool margin_mode) {
  Criterion c{name, true, ""};
  double worst = margin_mode ? 1e300 : 0.0;
  std::ostringstream fails;
  for (const auto& res : verify::run_suite(suite, opts)) {
    const bool ok = margin_mode ? res.worst > threshold : res.worst < threshold;
    if (!ok) {
      c.pass = false;
      fails << " [" << res.claim << ": " << res.detail << "]";
    }
    worst = margin_mode ? std::min(worst, res.worst) : std::max(worst, res.worst);
  }
  c.detail = (margin_mode ? "min margin " : "max residual ") + sci(worst) +
             (c.pass ? "" : ";" + fails.str());
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  verify::Options base;
  base.digits = 15;
  base.n_max = 2000;
  base.chain_n = 500;

  results.push_back(criterion_table());

  results.push_back(from_suite("route agreement: closed values strictly inside brackets at n=2000",
                               "containment", base, 0.0, true));

  {
    Criterion c{"monotone chains with slack 4*quad_tol, n=1..500", true, ""};
    double worst = 1e300;
    for (const char* suite : {"chain-power", "chain-rising"}) {
      for (const auto& res : verify::run_suite(suite, base)) {
        worst = std::min(worst, res.worst);
        if (!res.pass) {
          c.pass = false;
          c.detail += " [" + res.claim + "]";
        }
      }
    }
    c.detail = "min margin " + sci(worst) + c.detail;
    results.push_back(c);
  }

  results.push_back(from_suite("width identities y-z and b-a to 2*quad_tol", "width", base,
                               default_quad_tol(15).to_double() * 2, false));

  {
    verify::Options o = base;
    o.samples = 10000;
    results.push_back(
        from_suite("digamma-ratio inequality on 10^4 random triples", "soru", o, 0.0, true));
  }

  {
    verify::Options o = base;
    o.digits = 40;
    results.push_back(from_suite("finite-n sum identities, exact rationals, r<=6, n<=200",
                                 "lemma-top", o, 1e-20, false));
    verify::Options oi = base;
    oi.digits = 20;
    // quad_tol inside the identity evaluators is 10^-(digits+8)
    results.push_back(from_suite("finite-n integral identities vs direct quadrature, r<=5, n<=50",
                                 "lemma-int", oi, 1e-27, false));
    // merge the two halves into one criterion line
    Criterion b = results.back();
    results.pop_back();
    Criterion a = results.back();
    results.pop_back();
    Criterion merged{"finite-n identities (sums exact; integrals vs quadrature)",
                     a.pass && b.pass, a.detail + " / " + b.detail};
    results.push_back(merged);
  }

  {
    verify::Options o = base;
    o.digits = 20;
    results.push_back(from_suite("log-kernel integral identity to 1e-10 at 20 digits", "connon",
                                 o, 1e-10, false));
    results.push_back(from_suite(
        "euler sums: classical values to 1e-10 and direct summation to 1e-8", "euler-sum", o,
        1e-8, false));
    results.push_back(
        from_suite("digamma integral formula vs quadrature oracle to 1e-10, p in {2..5}",
                   "psi-int", o, 1e-10, false));
  }

  results.push_back(from_suite("strict decrease of the rising-weight constants over r=1..9",
                               "monotone-bar", base, 0.0, true));

  results.push_back(route_consistency());
  results.push_back(from_suite(
      "supplementary bracket-level ordering of the rising constants at n=2000",
      "bracket-order", base, 0.0, true));

  int failures = 0;
  int id = 0;
  for (const auto& c : results) {
    const bool numbered = id < 10;
    std::printf("%s  %s%2d: %s (%s)\n", c.pass ? "PASS" : "FAIL",
                numbered ? "criterion " : "extra ", numbered ? id + 1 : id - 9, c.name.c_str(),
                c.detail.c_str());
    if (!c.pass && numbered) ++failures;
    if (!c.pass && !numbered) ++failures;
    ++id;
  }
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures;
}
