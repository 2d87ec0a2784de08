#include "hypgamma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "hypgamma/hyperharmonic.hpp"
#include "hypgamma/parallel.hpp"
#include "hypgamma/quadrature.hpp"
#include "hypgamma/specfun.hpp"

namespace hypgamma::verify {

namespace {

using closedform::TrailingSumLimit;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string fmt_r(const PrecReal& r) { return r.to_string(3); }

double uniform01(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

const std::vector<std::string> kChainGrid = {"0", "0.5", "1", "2", "3.7", "5"};

ClaimResult claim(std::string suite, std::string text, bool pass, double worst,
                  std::string detail) {
  return ClaimResult{std::move(suite), std::move(text), pass, worst, std::move(detail)};
}

std::vector<ClaimResult> suite_soru(const Options& o) {
  const int digits = o.digits;
  std::mt19937_64 rng(o.seed);
  struct Triple {
    double r, x, y;
  };
  std::vector<Triple> triples(o.samples);
  for (auto& t : triples) {
    t.r = 20.0 * uniform01(rng);
    if (t.r <= 0.0) t.r = 1e-6;
    double x = 100.0 * uniform01(rng);
    double y = 100.0 * uniform01(rng);
    while (x == y || x == 0.0 || y == 0.0) {
      x = 100.0 * uniform01(rng);
      y = 100.0 * uniform01(rng);
    }
    t.x = std::min(x, y);
    t.y = std::max(x, y);
  }
  std::vector<double> margins(triples.size());
  parallel_for(0, static_cast<long>(triples.size()), o.exec, [&](long i) {
    const auto& t = triples[i];
    const PrecReal r = PrecReal::from_double(t.r, digits);
    const PrecReal x = PrecReal::from_double(t.x, digits);
    const PrecReal y = PrecReal::from_double(t.y, digits);
    const PrecReal psi_r = specfun::digamma(r);
    const PrecReal ratio =
        (specfun::digamma(y + r) - psi_r) / (specfun::digamma(x + r) - psi_r);
    margins[i] = (y / x - ratio).to_double();
  });
  const double worst = *std::min_element(margins.begin(), margins.end());
  std::ostringstream text;
  text << "digamma ratio (psi(y+r)-psi(r))/(psi(x+r)-psi(r)) < y/x on " << o.samples
       << " random triples";
  return {claim("soru", text.str(), worst > 0.0, worst, "min margin " + fmt(worst))};
}

std::vector<ClaimResult> suite_chain(const Options& o, Flavor flavor) {
  const std::string name = flavor == Flavor::power ? "chain-power" : "chain-rising";
  const int digits = o.digits;
  const PrecReal tol = default_quad_tol(digits);
  const PrecReal slack = 4 * tol;
  std::vector<ClaimResult> out;
  for (const auto& rs : kChainGrid) {
    const PrecReal r = o.r_override ? PrecReal::from_double(*o.r_override, digits)
                                    : PrecReal::from_string(rs, digits);
    const long n_hi = o.chain_n;
    squeeze::SequenceTrace trace(flavor, r, n_hi + 1, tol, digits, o.exec);
    const PrecReal cap =
        flavor == Flavor::power ? PrecReal(1, digits) : 1 / specfun::gamma_fn(r + 1);
    double worst = std::numeric_limits<double>::infinity();
    bool pass = true;
    for (long n = 1; n <= n_hi; ++n) {
      const PrecReal lo_n = trace.lower(n), lo_n1 = trace.lower(n + 1);
      const PrecReal up_n = trace.upper(n), up_n1 = trace.upper(n + 1);
      const double inc = (lo_n1 - lo_n + slack).to_double();
      const double dec = (up_n - up_n1 + slack).to_double();
      const double sep = (up_n1 - lo_n1 + slack).to_double();
      const double floor_ok = (lo_n + slack).to_double();
      const double cap_ok = (cap + slack - up_n).to_double();
      worst = std::min({worst, inc, dec, sep, floor_ok, cap_ok});
      pass = pass && inc > 0 && dec > 0 && sep > 0 && floor_ok >= 0 && cap_ok >= 0;
    }
    std::ostringstream text;
    text << "monotone chain, r=" << fmt_r(r) << ", n=1.." << n_hi;
    out.push_back(claim(name, text.str(), pass, worst, "min margin " + fmt(worst)));
    if (o.r_override) break;
  }
  return out;
}

std::vector<ClaimResult> suite_width(const Options& o) {
  const int digits = o.digits;
  const PrecReal tol = default_quad_tol(digits);
  std::vector<ClaimResult> out;
  for (Flavor flavor : {Flavor::power, Flavor::rising}) {
    for (const auto& rs : kChainGrid) {
      const PrecReal r = o.r_override ? PrecReal::from_double(*o.r_override, digits)
                                      : PrecReal::from_string(rs, digits);
      const long n_hi = o.chain_n;
      squeeze::SequenceTrace trace(flavor, r, n_hi, tol, digits, o.exec);
      const bool integer_r = r.is_integer();
      const unsigned ri = integer_r ? static_cast<unsigned>(r.to_long()) : 0;
      std::vector<mpq_class> row;
      if (integer_r) row = hyperharmonic::exact_prefix(n_hi, ri);
      double worst = 0.0;
      for (long n = 1; n <= n_hi; ++n) {
        PrecReal expected(0, digits);
        if (integer_r) {
          mpq_class w;
          if (flavor == Flavor::power) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), ri);
            w = row[n - 1] / mpq_class(p);
          } else {
            mpz_class p = 1;
            for (unsigned i = 0; i < ri; ++i) p *= (n + i);
            w = row[n - 1] / mpq_class(p);
          }
          expected = PrecReal::from_rational(w.get_mpq_t(), digits);
        } else {
          const PrecReal nn(n, digits);
          const PrecReal h = hyperharmonic::analytic(nn, r);
          expected = flavor == Flavor::power
                         ? h / pow(nn, r)
                         : h / specfun::rising_factorial(nn, r);
        }
        const double resid =
            abs(trace.upper(n) - trace.lower(n) - expected).to_double();
        worst = std::max(worst, resid);
      }
      const bool pass = worst <= (2 * tol).to_double();
      std::ostringstream text;
      text << "width " << (flavor == Flavor::power ? "y-z" : "b-a")
           << " equals the weighted hyperharmonic term, r=" << fmt_r(r);
      out.push_back(claim("width", text.str(), pass, worst, "max residual " + fmt(worst)));
      if (o.r_override) break;
    }
  }
  return out;
}

std::vector<ClaimResult> suite_containment(const Options& o) {
  const int digits = o.digits;
  const PrecReal tol = default_quad_tol(digits);
  std::vector<ClaimResult> out;
  for (Flavor flavor : {Flavor::power, Flavor::rising}) {
    for (unsigned r = 0; r <= 6; ++r) {
      if (o.r_override && static_cast<unsigned>(*o.r_override) != r) continue;
      const ConstantResult closed = flavor == Flavor::power
                                        ? closedform::gamma_h(r, digits)
                                        : closedform::gamma_h_bar(r, digits);
      const Bracket b = squeeze::squeeze_estimate(flavor, PrecReal(r, digits), o.n_max, tol,
                                                  digits, o.exec);
      const double lo_margin = (closed.value - (b.lower - 2 * tol)).to_double();
      const double hi_margin = ((b.upper + 2 * tol) - closed.value).to_double();
      const double worst = std::min(lo_margin, hi_margin);
      std::ostringstream text;
      text << "closed value inside bracket, "
           << (flavor == Flavor::power ? "power" : "rising") << " r=" << r
           << " n=" << o.n_max;
      out.push_back(
          claim("containment", text.str(), worst > 0.0, worst, "min margin " + fmt(worst)));
    }
  }
  return out;
}

std::vector<ClaimResult> suite_lemma_top(const Options& o) {
  const int digits = o.digits;
  const double threshold = std::pow(10.0, -(digits + 5));
  std::vector<long> ns = {1, 5, 50, 200};
  if (o.n_override) ns = {*o.n_override};
  std::vector<ClaimResult> out;
  for (bool bar : {false, true}) {
    double worst = 0.0;
    for (unsigned r = 0; r <= 6; ++r) {
      if (o.r_override && static_cast<unsigned>(*o.r_override) != r) continue;
      for (long n : ns) {
        const auto row = hyperharmonic::exact_prefix(n, r);
        mpq_class lhs = 0;
        for (long k = 1; k <= n; ++k) {
          mpz_class w;
          if (!bar) {
            mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(k), r);
          } else {
            w = 1;
            for (unsigned i = 0; i < r; ++i) w *= (k + i);
          }
          lhs += row[k - 1] / mpq_class(w);
        }
        if (r >= 1) lhs *= mpq_class(specfun::factorial(r - 1));
        const PrecReal rhs = bar ? closedform::lemma_top_bar_sum(r, n, digits)
                                 : closedform::lemma_top_sum(r, n, digits);
        const double resid =
            abs(rhs - PrecReal::from_rational(lhs.get_mpq_t(), digits)).to_double();
        worst = std::max(worst, resid);
      }
    }
    std::ostringstream text;
    text << "finite sum identity (" << (bar ? "rising" : "power")
         << " weight) vs exact rationals, r<=6";
    out.push_back(claim("lemma-top", text.str(), worst < threshold, worst,
                        "max residual " + fmt(worst)));
  }
  return out;
}

std::vector<ClaimResult> suite_lemma_int(const Options& o) {
  const int digits = o.digits;
  const PrecReal q = pow10(-(digits + 8), digits);
  const double threshold = (10 * q).to_double();
  std::vector<long> ns = {2, 10, 50};
  if (o.n_override) ns = {*o.n_override};
  std::vector<ClaimResult> out;
  for (bool bar : {false, true}) {
    double worst = 0.0;
    for (unsigned r = 0; r <= 5; ++r) {
      if (o.r_override && static_cast<unsigned>(*o.r_override) != r) continue;
      const PrecReal scale =
          r >= 1 ? PrecReal::from_integer(specfun::factorial(r - 1).get_mpz_t(), digits)
                 : PrecReal(1, digits);
      for (long n : ns) {
        const squeeze::Weighted f(bar ? Flavor::rising : Flavor::power, PrecReal(r, digits),
                                  digits);
        const Integrand fn = [&f](const PrecReal& x) { return f(x); };
        const PrecReal lhs = scale * integrate_finite(fn, PrecReal(1, digits),
                                                      PrecReal(n, digits),
                                                      QuadratureSpec::finite(q / scale));
        const PrecReal rhs = bar ? closedform::lemma_int_bar_value(r, n, digits)
                                 : closedform::lemma_int_value(r, n, digits);
        worst = std::max(worst, abs(rhs - lhs).to_double());
      }
    }
    std::ostringstream text;
    text << "finite integral identity (" << (bar ? "rising" : "power")
         << " weight) vs direct quadrature, r<=5";
    out.push_back(claim("lemma-int", text.str(), worst < threshold, worst,
                        "max residual " + fmt(worst)));
  }
  return out;
}

std::vector<ClaimResult> suite_connon(const Options& o) {
  const int digits = std::max(o.digits, 20);
  const PrecReal rhs = closedform::sigma_p(1, digits) + PrecReal(1, digits) / 2 -
                       specfun::zeta_int(2, digits) + specfun::stieltjes_gamma1(digits);
  const double resid = abs(closedform::j_integral(digits) - rhs).to_double();
  return {claim("connon",
                "log-kernel integral equals sigma_1 + 1/2 - zeta(2) + gamma_1",
                resid < 1e-10, resid, "residual " + fmt(resid))};
}

// Direct summation of sum_{n>=r} H_n/(n+1-r)^p with an analytic tail.
PrecReal euler_sum_oracle(unsigned p, unsigned r, int digits) {
  const long N = 100000;
  PrecReal acc(0, digits);
  PrecReal h(0, digits);
  for (long n = 1; n <= N; ++n) {
    h += 1 / PrecReal(n, digits);
    if (n >= static_cast<long>(r))
      acc += h / pow(PrecReal(n + 1 - static_cast<long>(r), digits), static_cast<long>(p));
  }
  // tail over m = n+1-r > M, H_{m+r-1} ~ ln(m+r-1) + gamma + 1/(2(m+r-1))
  const long M = N + 1 - static_cast<long>(r);
  const PrecReal mm(M, digits);
  const PrecReal g = specfun::euler_gamma(digits);
  const PrecReal lnM = log(mm);
  const long pl = static_cast<long>(p);
  PrecReal tail = (lnM + g) / ((pl - 1) * pow(mm, pl - 1)) +
                  1 / ((pl - 1) * (pl - 1) * pow(mm, pl - 1));
  tail -= (lnM + g) / (2 * pow(mm, pl));
  tail += (PrecReal(static_cast<long>(r) - 1, digits) + PrecReal::from_double(0.5, digits)) /
          (pl * pow(mm, pl));
  return acc + tail;
}

std::vector<ClaimResult> suite_euler_sum(const Options& o) {
  const int digits = std::max(o.digits, 20);
  std::vector<ClaimResult> out;
  {
    const double resid = abs(closedform::euler_sum_h(2, 1, digits) -
                             2 * specfun::zeta_int(3, digits))
                             .to_double();
    out.push_back(claim("euler-sum", "sum H_n/n^2 = 2 zeta(3)", resid < 1e-10, resid,
                        "residual " + fmt(resid)));
  }
  {
    const double resid = abs(closedform::euler_sum_h(3, 1, digits) -
                             5 * specfun::zeta_int(4, digits) / 4)
                             .to_double();
    out.push_back(claim("euler-sum", "sum H_n/n^3 = 5/4 zeta(4)", resid < 1e-10, resid,
                        "residual " + fmt(resid)));
  }
  double worst = 0.0;
  for (unsigned p = 2; p <= 4; ++p)
    for (unsigned r = 1; r <= 3; ++r)
      worst = std::max(worst, abs(closedform::euler_sum_h(p, r, digits) -
                                  euler_sum_oracle(p, r, digits))
                                  .to_double());
  out.push_back(claim("euler-sum",
                      "closed form vs direct summation, p in {2,3,4}, r in {1,2,3}",
                      worst < 1e-8, worst, "max residual " + fmt(worst)));
  return out;
}

std::vector<ClaimResult> suite_euler_sum_limit(const Options& o) {
  const int digits = std::max(o.digits, 20);
  std::vector<ClaimResult> out;
  for (auto [p, r] : {std::pair<unsigned, unsigned>{2, 1}, {2, 2}, {3, 2}}) {
    const PrecReal oracle = euler_sum_oracle(p, r, digits);
    const PrecReal shifted = closedform::euler_sum_h(p, r, digits, TrailingSumLimit::shifted);
    const PrecReal printed = closedform::euler_sum_h(p, r, digits, TrailingSumLimit::printed);
    const mpq_class hq = specfun::harmonic_exact(r);
    mpz_class rp;
    mpz_ui_pow_ui(rp.get_mpz_t(), r, p);
    const mpq_class gapq = hq / mpq_class(rp);
    const PrecReal gap = PrecReal::from_rational(gapq.get_mpq_t(), digits);
    const double resid_shifted = abs(shifted - oracle).to_double();
    const PrecReal printed_gap = (p % 2 == 0) ? shifted - printed : printed - shifted;
    const double resid_gap = abs(printed_gap - gap).to_double();
    std::ostringstream text;
    text << "trailing-sum limit r-1 matches oracle and the r reading differs by H_r/r^p"
         << " (p=" << p << ", r=" << r << ")";
    out.push_back(claim("euler-sum-limit", text.str(), resid_shifted < 1e-8 && resid_gap < 1e-20,
                        std::max(resid_shifted, resid_gap),
                        "oracle residual " + fmt(resid_shifted)));
  }
  return out;
}

std::vector<ClaimResult> suite_psi_int(const Options& o) {
  const int digits = std::max(o.digits, 20);
  double worst = 0.0;
  for (unsigned p = 2; p <= 5; ++p) {
    const long T = 1000;
    const Integrand f = [p](const PrecReal& x) {
      return specfun::digamma(x + 1) / pow(x, static_cast<long>(p));
    };
    const PrecReal head = integrate_finite(f, PrecReal(1, digits), PrecReal(T, digits),
                                           QuadratureSpec::finite(pow10(-14, digits)));
    const PrecReal tt(T, digits);
    const long pl = static_cast<long>(p);
    // integral of (ln x + 1/(2x) - 1/(12x^2) + 1/(120x^4))/x^p beyond T
    PrecReal tail = log(tt) / ((pl - 1) * pow(tt, pl - 1)) +
                    1 / ((pl - 1) * (pl - 1) * pow(tt, pl - 1));
    tail += 1 / (2 * pl * pow(tt, pl));
    tail -= 1 / (12 * (pl + 1) * pow(tt, pl + 1));
    tail += 1 / (120 * (pl + 3) * pow(tt, pl + 3));
    const double resid =
        abs(closedform::psi_integral(p, digits) - (head + tail)).to_double();
    worst = std::max(worst, resid);
  }
  return {claim("psi-int", "digamma integral formula vs truncated quadrature, p in {2..5}",
                worst < 1e-10, worst, "max residual " + fmt(worst))};
}

std::vector<ClaimResult> suite_monotone_bar(const Options& o) {
  const int digits = o.digits;
  double worst = std::numeric_limits<double>::infinity();
  PrecReal prev = closedform::gamma_h_bar(1, digits).value;
  for (unsigned r = 2; r <= 9; ++r) {
    const PrecReal cur = closedform::gamma_h_bar(r, digits).value;
    worst = std::min(worst, (prev - cur).to_double());
    prev = cur;
  }
  return {claim("monotone-bar", "rising-weight constants strictly decrease over r=1..9",
                worst > 0.0, worst, "min margin " + fmt(worst))};
}

std::vector<ClaimResult> suite_bracket_order(const Options& o) {
  const int digits = o.digits;
  const PrecReal tol = default_quad_tol(digits);
  std::vector<squeeze::SequenceTrace> traces;
  traces.reserve(9);
  for (unsigned r = 1; r <= 9; ++r)
    traces.emplace_back(Flavor::rising, PrecReal(r, digits), o.n_max, tol, digits, o.exec);
  double worst = std::numeric_limits<double>::infinity();
  for (unsigned r = 1; r <= 8; ++r) {
    const double margin =
        (traces[r - 1].lower(o.n_max) - traces[r].upper(o.n_max)).to_double();
    worst = std::min(worst, margin);
  }
  std::ostringstream text;
  text << "upper bracket of order r+1 below lower bracket of order r, r=1..8, n="
       << o.n_max;
  return {claim("bracket-order", text.str(), worst > 0.0, worst,
                "min margin " + fmt(worst))};
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"soru",      "chain-power", "chain-rising", "width",
          "containment", "lemma-top",  "lemma-int",    "connon",
          "euler-sum", "euler-sum-limit",    "psi-int",      "monotone-bar",
          "bracket-order"};
}

std::vector<ClaimResult> run_suite(const std::string& name, const Options& options) {
  if (name == "soru") return suite_soru(options);
  if (name == "chain-power") return suite_chain(options, Flavor::power);
  if (name == "chain-rising") return suite_chain(options, Flavor::rising);
  if (name == "width") return suite_width(options);
  if (name == "containment") return suite_containment(options);
  if (name == "lemma-top") return suite_lemma_top(options);
  if (name == "lemma-int") return suite_lemma_int(options);
  if (name == "connon") return suite_connon(options);
  if (name == "euler-sum") return suite_euler_sum(options);
  if (name == "euler-sum-limit") return suite_euler_sum_limit(options);
  if (name == "psi-int") return suite_psi_int(options);
  if (name == "monotone-bar") return suite_monotone_bar(options);
  if (name == "bracket-order") return suite_bracket_order(options);
  throw DomainError("unknown verification suite: " + name);
}

}  // namespace hypgamma::verify
