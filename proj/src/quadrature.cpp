#include "hypgamma/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace hypgamma {

namespace {

struct GaussRule {
  // Nodes in (-1, 1) with matching weights, full set, ascending.
  std::vector<PrecReal> nodes;
  std::vector<PrecReal> weights;
};

// Legendre P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<PrecReal, PrecReal> legendre_pair(long n, const PrecReal& x) {
  PrecReal p_prev(1, x.digits());
  PrecReal p = x;
  for (long k = 2; k <= n; ++k) {
    PrecReal next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
    p_prev = std::move(p);
    p = std::move(next);
  }
  return {p, p_prev};
}

std::shared_ptr<const GaussRule> make_rule(long n, int digits) {
  auto rule = std::make_shared<GaussRule>();
  rule->nodes.assign(n, PrecReal::zero(digits));
  rule->weights.assign(n, PrecReal::zero(digits));
  const PrecReal eps = pow10(-(digits + kGuardDigits - 3), digits);
  for (long i = 0; i < n / 2; ++i) {
    // Descending positive roots; double seed, Newton at full precision.
    const double seed = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    PrecReal x = PrecReal::from_double(seed, digits);
    PrecReal dpn(0, digits);
    for (int iter = 0; iter < 80; ++iter) {
      auto [pn, pn1] = legendre_pair(n, x);
      dpn = n * (x * pn - pn1) / (x * x - 1);
      const PrecReal dx = pn / dpn;
      x -= dx;
      if (abs(dx) < eps) {
        auto [pn2, pn12] = legendre_pair(n, x);
        dpn = n * (x * pn2 - pn12) / (x * x - 1);
        break;
      }
    }
    const PrecReal w = 2 / ((1 - x * x) * dpn * dpn);
    rule->nodes[n / 2 + i] = x;
    rule->weights[n / 2 + i] = w;
    rule->nodes[n / 2 - 1 - i] = -x;
    rule->weights[n / 2 - 1 - i] = w;
  }
  return rule;
}

std::shared_ptr<const GaussRule> gauss_rule(long n, int digits) {
  static std::mutex mutex;
  static std::map<std::pair<long, int>, std::shared_ptr<const GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, digits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = make_rule(n, digits);
  cache.emplace(key, rule);
  return rule;
}

long rule_order(int digits) {
  long m = 2 * (digits + 10) / 3;
  m = std::clamp(m, 16L, 96L);
  return m + (m % 2);
}

PrecReal apply_rule(const GaussRule& rule, const Integrand& f, const PrecReal& a,
                    const PrecReal& b) {
  const PrecReal center = (a + b) / 2;
  const PrecReal half = (b - a) / 2;
  PrecReal acc(0, a.digits());
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(center + half * rule.nodes[i]);
  return half * acc;
}

struct AdaptiveContext {
  const Integrand& f;
  const GaussRule& coarse;
  const GaussRule& fine;
  int max_depth;
};

PrecReal adaptive_panel(const AdaptiveContext& ctx, const PrecReal& a, const PrecReal& b,
                        const PrecReal& tol, int depth) {
  const PrecReal q_coarse = apply_rule(ctx.coarse, ctx.f, a, b);
  const PrecReal q_fine = apply_rule(ctx.fine, ctx.f, a, b);
  if (abs(q_coarse - q_fine) <= tol) return q_fine;
  if (depth >= ctx.max_depth)
    throw ToleranceError("refinement limit exceeded before reaching abs_tol");
  const PrecReal mid = (a + b) / 2;
  const PrecReal half_tol = tol / 2;
  return adaptive_panel(ctx, a, mid, half_tol, depth + 1) +
         adaptive_panel(ctx, mid, b, half_tol, depth + 1);
}

void validate(const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0)) throw DomainError("abs_tol must be positive");
  if (spec.max_refinements < 1) throw DomainError("max_refinements must be at least 1");
}

}  // namespace

PrecReal integrate_finite(const Integrand& f, const PrecReal& lo, const PrecReal& hi,
                          const QuadratureSpec& spec) {
  validate(spec);
  if (!(lo < hi)) throw DomainError("invalid interval: lo must be below hi");
  const int digits = std::max({lo.digits(), hi.digits(), spec.abs_tol.digits()});
  const long order = rule_order(digits);
  auto coarse = gauss_rule(order, digits);
  auto fine = gauss_rule(2 * order, digits);
  AdaptiveContext ctx{f, *coarse, *fine, spec.max_refinements};
  return adaptive_panel(ctx, lo.with_digits(digits), hi.with_digits(digits),
                        spec.abs_tol.with_digits(digits), 0);
}

PrecReal integrate_semi_infinite(const Integrand& f, const PrecReal& lo,
                                 const QuadratureSpec& spec, double decay_rate) {
  validate(spec);
  if (!(decay_rate > 0)) throw DomainError("decay_rate must be positive");
  const int digits = std::max(lo.digits(), spec.abs_tol.digits());
  // Slightly understated rate so |f| <= C e^{-a t} stays valid for the
  // effective bound we cut with.
  const PrecReal a = PrecReal::from_double(0.9 * decay_rate, digits);
  const PrecReal tol = spec.abs_tol.with_digits(digits);

  const PrecReal step = max(PrecReal(1, digits), 1 / a);
  PrecReal c_est(0, digits);
  PrecReal t_last = lo;
  for (int j = 1; j <= 8; ++j) {
    t_last = lo + j * step;
    c_est = max(c_est, abs(f(t_last)) * exp(a * t_last));
  }
  if (c_est.is_zero()) c_est = tol;

  for (int round = 0; round < 8; ++round) {
    // C e^{-aT}/a <= tol/40: the 4x slack of the acceptance test below still
    // keeps the true tail under tol/10.
    PrecReal cut = log(40 * c_est / (a * tol)) / a;
    if (cut < t_last + 1) cut = t_last + 1;
    const PrecReal scaled = abs(f(cut)) * exp(a * cut);
    if (scaled <= 4 * c_est) {
      QuadratureSpec finite_spec =
          QuadratureSpec::finite(tol * 9 / 10, spec.max_refinements);
      return integrate_finite(f, lo.with_digits(digits), cut, finite_spec);
    }
    c_est = 2 * scaled;
  }
  throw DecayError("tail bound keeps growing; integrand violates the decay assumption");
}

}  // namespace hypgamma
