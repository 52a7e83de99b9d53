#pragma once

#include "lpsq/trig_poly.hpp"

namespace lpsq {

// Periodic Hilbert transform on coefficients: \hat(Hf)(n) = -i sgn(n) \hat f(n).
TrigPoly conjugate_function(const TrigPoly& f);

// Riesz projection onto frequencies n >= 0.
TrigPoly analytic_projection(const TrigPoly& f);

// ||f||_{L1} + ||Hf||_{L1} on an oversampled grid.
double h1_norm(const TrigPoly& f, int oversample = 8);

// Analytic completion with prescribed positive boundary modulus: returns
// exp(u + i*conj(u)) sampled on the grid, u = log w truncated to the grid's
// Fourier modes. |output| equals w at the grid points to machine precision.
// Rejects w with zeros, negative values, or a nonreal sample.
GridFunction outer_function(const GridFunction& w);

// Kislyakov-Xu style splitting f = h + g of an analytic 1-D polynomial:
// h = f * O with O the outer function of modulus min(1, lambda^2/|f|^2), so
// |h| = lambda * min(|f|/lambda, lambda/|f|) pointwise by construction.
struct KxSplit {
  GridFunction h;
  GridFunction g;
  double lambda = 0.0;
  double witness_constant = 0.0;  // max of the two measured bullet constants
};

struct KxReport {
  double lambda = 0.0;
  double h_sup = 0.0;      // max |h| over the grid
  double bullet1_c = 0.0;  // sup |h| / (lambda min(|f|/lambda, lambda/|f|))
  double bullet2_c = 0.0;  // ||g||_1 / integral_{|f|>lambda} |f|
  double residual = 0.0;   // max |h + g - f| over the grid
};

// Requires is_analytic(f), lambda > 0, and min |f| > 1e-10 max |f| on the
// evaluation grid (perturb polynomials with grid zeros before splitting).
KxSplit kx_split(const TrigPoly& f, double lambda, int resolution);
KxReport kx_report(const TrigPoly& f, const KxSplit& split, int resolution);

}  // namespace lpsq
