#pragma once

#include <utility>
#include <vector>

#include "hypgamma/parallel.hpp"
#include "hypgamma/quadrature.hpp"
#include "hypgamma/real.hpp"

namespace hypgamma {

// Weight under the hyperharmonic term: x^r (power) or x^rising(r) (rising).
enum class Flavor { power, rising };

/// Certified enclosure from the monotone sequence pair at index n: the limit
/// constant lies in [lower - 2 quad_tol, upper + 2 quad_tol].
struct Bracket {
  Flavor flavor;
  PrecReal r;
  long n = 0;
  PrecReal lower;
  PrecReal upper;
  PrecReal quad_tol;  // total tolerance spent on the [1, n] integral
};

PrecReal default_quad_tol(int digits);

namespace squeeze {

/// Integrand h_x^(r)/x^r or h_x^(r)/x^rising with psi(r), Gamma(r) hoisted;
/// the small-integer-r rising factorial is a direct product.
class Weighted {
 public:
  Weighted(Flavor flavor, const PrecReal& r, int digits);

  PrecReal operator()(const PrecReal& x) const;
  PrecReal term(long k) const { return (*this)(PrecReal(k, digits_)); }
  const PrecReal& order() const { return r_; }
  int digits() const { return digits_; }
  Flavor flavor() const { return flavor_; }

 private:
  Flavor flavor_;
  PrecReal r_;
  int digits_;
  bool r_zero_;
  long r_int_;  // -1 when r is not a small non-negative integer
  PrecReal psi_r_;
  PrecReal gamma_r_;
};

/// Terms h_k^(r)/w(k) for k = 1..n_max+1 and unit panels of the matching
/// integral for k = 1..n_max, evaluated independently per index (the
/// OpenMP kernel) and reduced in fixed order, so Exec::parallel is
/// bit-identical to the Exec::serial reference. Successive n reuse the same
/// panels; per-panel tolerance is quad_tol/n_max.
class SequenceTrace {
 public:
  SequenceTrace(Flavor flavor, const PrecReal& r, long n_max, const PrecReal& quad_tol,
                int digits, Exec exec = Exec::parallel);

  Flavor flavor() const { return flavor_; }
  const PrecReal& order() const { return r_; }
  long n_max() const { return n_max_; }
  const PrecReal& quad_tol() const { return quad_tol_; }

  const PrecReal& term(long k) const;      // k in [1, n_max+1]
  const PrecReal& panel(long k) const;     // integral over [k, k+1], k in [1, n_max]
  const PrecReal& integral_to(long n) const;  // integral over [1, n]
  PrecReal upper(long n) const;            // y_n (power) / b_n (rising)
  PrecReal lower(long n) const;            // z_n (power) / a_n (rising)
  Bracket bracket(long n) const;
  // Tighter enclosure [lower + A, lower + A + term(n+1)] (and the rising
  // analogue with C): strictly contains the limit constant.
  std::pair<PrecReal, PrecReal> refined(long n) const;

 private:
  void check_n(long n, long hi) const;

  Flavor flavor_;
  PrecReal r_;
  long n_max_;
  int digits_;
  PrecReal quad_tol_;
  std::vector<PrecReal> terms_;      // index k, 1..n_max+1
  std::vector<PrecReal> panels_;     // index k, 1..n_max
  std::vector<PrecReal> sums_;      // partial sums of terms, 0..n_max+1
  std::vector<PrecReal> integrals_;  // integral over [1, n], 1..n_max
};

PrecReal seq_y(long n, const PrecReal& r, const PrecReal& quad_tol, int digits);
PrecReal seq_z(long n, const PrecReal& r, const PrecReal& quad_tol, int digits);
PrecReal seq_a(long n, const PrecReal& r, const PrecReal& quad_tol, int digits);
PrecReal seq_b(long n, const PrecReal& r, const PrecReal& quad_tol, int digits);

// A = h_n^(r)/n^r - B, B = integral of the power integrand over [n, n+1];
// C, D the rising analogues.
PrecReal bound_A(long n, const PrecReal& r, const PrecReal& quad_tol, int digits);
PrecReal bound_B(long n, const PrecReal& r, const PrecReal& quad_tol, int digits);
PrecReal bound_C(long n, const PrecReal& r, const PrecReal& quad_tol, int digits);
PrecReal bound_D(long n, const PrecReal& r, const PrecReal& quad_tol, int digits);

Bracket squeeze_estimate(Flavor flavor, const PrecReal& r, long n_max,
                         const PrecReal& quad_tol, int digits, Exec exec = Exec::parallel);
std::pair<PrecReal, PrecReal> refined_estimate(Flavor flavor, const PrecReal& r, long n,
                                               const PrecReal& quad_tol, int digits,
                                               Exec exec = Exec::parallel);

}  // namespace squeeze
}  // namespace hypgamma
