#include "lpsq/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpsq {

namespace {

void require_1d(const TrigPoly& f, const char* who) {
  if (f.dim() != 1) throw std::invalid_argument(std::string(who) + ": expects a 1-D polynomial");
}

}  // namespace

TrigPoly conjugate_function(const TrigPoly& f) {
  require_1d(f, "conjugate_function");
  TrigPolyBuilder b(1);
  b.reserve(f.term_count());
  for (std::size_t i = 0; i < f.term_count(); ++i) {
    const int32_t n = f.exponent(i)[0];
    if (n == 0) continue;
    const cd factor = n > 0 ? cd{0.0, -1.0} : cd{0.0, 1.0};
    b.add(f.exponent(i), factor * f.amplitude(i));
  }
  return std::move(b).build();
}

TrigPoly analytic_projection(const TrigPoly& f) {
  require_1d(f, "analytic_projection");
  TrigPolyBuilder b(1);
  b.reserve(f.term_count());
  for (std::size_t i = 0; i < f.term_count(); ++i) {
    if (f.exponent(i)[0] >= 0) b.add(f.exponent(i), f.amplitude(i));
  }
  return std::move(b).build();
}

double h1_norm(const TrigPoly& f, int oversample) {
  require_1d(f, "h1_norm");
  return lp_norm(f, 1.0, oversample) + lp_norm(conjugate_function(f), 1.0, oversample);
}

GridFunction outer_function(const GridFunction& w) {
  if (w.dim() != 1) throw std::invalid_argument("outer_function: expects a 1-D grid");
  const std::size_t n = w.size();
  double peak = 0.0;
  for (cd v : w.samples()) peak = std::max(peak, std::abs(v));
  std::vector<cd> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cd v = w.at_flat(i);
    if (!(v.real() > 0.0) || std::abs(v.imag()) > 1e-12 * std::max(peak, 1.0))
      throw std::invalid_argument("outer_function: modulus must be strictly positive and real");
    u[i] = cd{std::log(v.real()), 0.0};
  }

  // Spectrum of log w on the grid's modes.
  dft_nd(u, w.shape(), -1);
  const double scale = 1.0 / static_cast<double>(n);
  // Analytic completion u + i*conj(u): keep slot 0 and the (self-conjugate)
  // Nyquist slot as-is, double the positive frequencies, drop the negatives.
  std::vector<cd> a(n, cd{0.0, 0.0});
  a[0] = u[0] * scale;
  for (std::size_t k = 1; k < n / 2; ++k) a[k] = 2.0 * u[k] * scale;
  a[n / 2] = u[n / 2] * scale;
  dft_nd(a, w.shape(), +1);

  for (std::size_t i = 0; i < n; ++i) a[i] = std::exp(a[i]);
  return GridFunction(w.shape(), std::move(a));
}

KxSplit kx_split(const TrigPoly& f, double lambda, int resolution) {
  require_1d(f, "kx_split");
  if (!is_analytic(f)) throw std::invalid_argument("kx_split: polynomial must be analytic");
  if (!(lambda > 0.0)) throw std::invalid_argument("kx_split: lambda must be positive");

  const int res[1] = {resolution};
  GridFunction fg = synthesize(f, res);
  double peak = 0.0, trough = std::numeric_limits<double>::infinity();
  for (cd v : fg.samples()) {
    const double m = std::abs(v);
    peak = std::max(peak, m);
    trough = std::min(trough, m);
  }
  if (!(trough > 1e-10 * peak))
    throw std::invalid_argument(
        "kx_split: |f| vanishes on the grid; perturb the polynomial away from its zero first");

  std::vector<cd> modulus(fg.size());
  for (std::size_t i = 0; i < fg.size(); ++i) {
    const double m = std::abs(fg.at_flat(i));
    modulus[i] = cd{std::min(1.0, lambda * lambda / (m * m)), 0.0};
  }
  const GridFunction outer = outer_function(GridFunction(fg.shape(), std::move(modulus)));

  std::vector<cd> h(fg.size()), g(fg.size());
  for (std::size_t i = 0; i < fg.size(); ++i) {
    h[i] = fg.at_flat(i) * outer.at_flat(i);
    g[i] = fg.at_flat(i) - h[i];
  }
  KxSplit split{GridFunction(fg.shape(), std::move(h)), GridFunction(fg.shape(), std::move(g)), lambda, 0.0};

  const KxReport rep = kx_report(f, split, resolution);
  split.witness_constant = std::max(rep.bullet1_c, rep.bullet2_c);
  return split;
}

KxReport kx_report(const TrigPoly& f, const KxSplit& split, int resolution) {
  require_1d(f, "kx_report");
  const int res[1] = {resolution};
  const GridFunction fg = synthesize(f, res);
  if (fg.size() != split.h.size() || fg.size() != split.g.size())
    throw std::invalid_argument("kx_report: split grids do not match the requested resolution");

  KxReport rep;
  rep.lambda = split.lambda;
  double g_mean = 0.0, superlevel_mean = 0.0;
  for (std::size_t i = 0; i < fg.size(); ++i) {
    const double fm = std::abs(fg.at_flat(i));
    const double hm = std::abs(split.h.at_flat(i));
    const double bound = split.lambda * std::min(fm / split.lambda, split.lambda / fm);
    rep.h_sup = std::max(rep.h_sup, hm);
    rep.bullet1_c = std::max(rep.bullet1_c, hm / bound);
    rep.residual = std::max(rep.residual, std::abs(split.h.at_flat(i) + split.g.at_flat(i) - fg.at_flat(i)));
    g_mean += std::abs(split.g.at_flat(i));
    if (fm > split.lambda) superlevel_mean += fm;
  }
  g_mean /= static_cast<double>(fg.size());
  superlevel_mean /= static_cast<double>(fg.size());
  if (superlevel_mean > 0.0) {
    rep.bullet2_c = g_mean / superlevel_mean;
  } else {
    rep.bullet2_c = g_mean > 1e-12 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return rep;
}

}  // namespace lpsq
