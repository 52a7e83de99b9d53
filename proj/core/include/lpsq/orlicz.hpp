#pragma once

#include <optional>

#include "lpsq/trig_poly.hpp"

namespace lpsq {

// Parameters of the Luxemburg-type L log^r L norm
//   ||f|| = inf{ lambda > 0 : mean (|f|/lambda) log^r(1 + |f|/lambda) <= 1 }.
struct OrliczParams {
  double r = 1.0;
  double tol = 1e-8;           // relative bisection tolerance
  double bracket_lo = 0.5;     // initial search interval, auto-expanded
  double bracket_hi = 2.0;
};

// Luxemburg norm by bisection on the strictly decreasing defining integral
// (grid mean). Returns 0 for the zero function. The returned lambda*
// satisfies integral(lambda*) <= 1 < integral(lambda* (1 - 10 tol)).
double orlicz_norm(const GridFunction& g, const OrliczParams& params);
double orlicz_norm(std::span<const double> abs_values, const OrliczParams& params);

// Weak-L^{1,inf} quasinorm sup_{t>0} t * frac{|g| > t}, evaluated exactly on
// the sample distribution (the sup is attained at left limits of sample
// values).
double weak_quasinorm(const GridFunction& g);
double weak_quasinorm(std::span<const double> abs_values);

// Ratio || sum_n a_n r_{n_1} x ... x r_{n_d} ||_{L^p(Omega^d)} / ||a||_{l2}
// for Rademacher signs. Coefficients are indexed by the lattice points of
// `a` (all coordinates must be >= 0). Exact enumeration over the sign
// assignments of the occupied per-axis indices when their total count is at
// most `enumeration_limit`; otherwise a seeded Monte Carlo average over
// `mc_samples` sign draws.
struct KhintchineOptions {
  int enumeration_limit = 20;      // max total occupied indices for exact path
  std::size_t mc_samples = 200000;
  uint64_t mc_seed = 1;
};
double khintchine_ratio(const TrigPoly& a, double p, const KhintchineOptions& opts = {});

}  // namespace lpsq
