#include "lpsq/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace lpsq {

namespace {

// Signed integer bin index of spectrum slot s for an axis of resolution r.
int slot_to_bin(std::size_t s, int r) {
  return static_cast<int>(s) < r / 2 ? static_cast<int>(s) : static_cast<int>(s) - r;
}

// Dyadic window index of a nonzero frequency: xi in +-[2^k, 2^{k+1}).
int window_index(double xi) {
  return static_cast<int>(std::floor(std::log2(std::abs(xi))));
}

}  // namespace

BandlimitedFn::BandlimitedFn(double halfwidth, std::vector<int> shape, std::vector<cd> samples,
                             std::vector<std::pair<double, double>> spectral_support)
    : halfwidth_(halfwidth),
      shape_(std::move(shape)),
      samples_(std::move(samples)),
      spectral_support_(std::move(spectral_support)) {
  if (!(halfwidth_ > 0.0)) throw std::invalid_argument("BandlimitedFn: halfwidth must be positive");
  if (shape_.empty() || spectral_support_.size() != shape_.size())
    throw std::invalid_argument("BandlimitedFn: shape/spectral_support rank mismatch");
  std::size_t total = 1;
  for (std::size_t j = 0; j < shape_.size(); ++j) {
    const int r = shape_[j];
    if (r < 2 || !is_pow2(static_cast<std::size_t>(r)))
      throw std::invalid_argument("BandlimitedFn: resolutions must be powers of two >= 2");
    total *= static_cast<std::size_t>(r);
    const double nyquist = r / (4.0 * halfwidth_);
    const auto& [lo, hi] = spectral_support_[j];
    if (lo > hi || std::max(std::abs(lo), std::abs(hi)) >= nyquist)
      throw std::invalid_argument("BandlimitedFn: spectral support must fit below the grid Nyquist");
  }
  if (total != samples_.size()) throw std::invalid_argument("BandlimitedFn: sample count mismatch");
}

BandlimitedFn BandlimitedFn::from_spectrum_1d(double halfwidth, int resolution,
                                              const std::function<cd(double)>& spectrum_fn,
                                              std::pair<double, double> spectral_support) {
  std::vector<cd> slots(static_cast<std::size_t>(resolution), cd{0.0, 0.0});
  const double dxi = 1.0 / (2.0 * halfwidth);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const int m = slot_to_bin(s, resolution);
    const double xi = m * dxi;
    if (xi < spectral_support.first || xi > spectral_support.second) continue;
    // Sample grid starts at -L: absorb the offset phase (-1)^m into the slot.
    const double parity = (m & 1) ? -1.0 : 1.0;
    slots[s] = spectrum_fn(xi) * dxi * parity;
  }
  const int shape[1] = {resolution};
  dft_nd(slots, shape, +1);
  return BandlimitedFn(halfwidth, {resolution}, std::move(slots), {spectral_support});
}

BandlimitedFn BandlimitedFn::tensor(std::span<const BandlimitedFn> factors) {
  if (factors.empty()) throw std::invalid_argument("BandlimitedFn::tensor: needs factors");
  std::vector<int> shape;
  std::vector<std::pair<double, double>> support;
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.dim() != 1) throw std::invalid_argument("BandlimitedFn::tensor: factors must be 1-D");
    if (f.halfwidth() != factors[0].halfwidth())
      throw std::invalid_argument("BandlimitedFn::tensor: halfwidths must match");
    shape.push_back(f.shape()[0]);
    support.push_back(f.spectral_support()[0]);
    total *= f.size();
  }
  std::vector<cd> samples(total);
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    cd v{1.0, 0.0};
    for (std::size_t j = 0; j < factors.size(); ++j) v *= factors[j].samples()[idx[j]];
    samples[flat] = v;
    for (std::size_t j = factors.size(); j-- > 0;) {
      if (++idx[j] < factors[j].size()) break;
      idx[j] = 0;
    }
  }
  return BandlimitedFn(factors[0].halfwidth(), std::move(shape), std::move(samples), std::move(support));
}

double BandlimitedFn::boundary_decay() const {
  double peak = 0.0;
  for (cd v : samples_) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  double edge = 0.0;
  // A sample is "near the boundary" when its index along some axis is the
  // first or last along that axis.
  std::vector<int> idx(shape_.size(), 0);
  for (std::size_t flat = 0; flat < samples_.size(); ++flat) {
    bool boundary = false;
    for (std::size_t j = 0; j < shape_.size(); ++j) {
      if (idx[j] == 0 || idx[j] == shape_[j] - 1) boundary = true;
    }
    if (boundary) edge = std::max(edge, std::abs(samples_[flat]));
    for (std::size_t j = shape_.size(); j-- > 0;) {
      if (++idx[j] < shape_[j]) break;
      idx[j] = 0;
    }
  }
  return edge / peak;
}

BandlimitedFn rough_project(const BandlimitedFn& f, int k, int axis) {
  if (axis < 0 || axis >= f.dim()) throw std::invalid_argument("rough_project: axis out of range");
  std::vector<cd> spec(f.samples().begin(), f.samples().end());
  dft_nd(spec, f.shape(), -1);

  const double lo = std::exp2(k), hi = std::exp2(k + 1);
  const double dxi = 1.0 / (2.0 * f.halfwidth());
  // Window membership per slot along `axis`.
  const int r = f.shape()[axis];
  std::vector<char> keep(static_cast<std::size_t>(r));
  for (int s = 0; s < r; ++s) {
    const double xi = slot_to_bin(static_cast<std::size_t>(s), r) * dxi;
    keep[static_cast<std::size_t>(s)] = (xi >= lo && xi < hi) || (xi <= -lo && xi > -hi);
  }

  std::size_t inner = 1;
  for (int j = f.dim() - 1; j > axis; --j) inner *= static_cast<std::size_t>(f.shape()[j]);
  for (std::size_t flat = 0; flat < spec.size(); ++flat) {
    const std::size_t s = (flat / inner) % static_cast<std::size_t>(r);
    if (!keep[s]) spec[flat] = cd{0.0, 0.0};
  }

  dft_nd(spec, f.shape(), +1);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (cd& v : spec) v *= scale;
  return BandlimitedFn(f.halfwidth(), f.shape(), std::move(spec), f.spectral_support());
}

BandlimitedFn euclid_square_function(const BandlimitedFn& f) {
  std::vector<cd> spec(f.samples().begin(), f.samples().end());
  dft_nd(spec, f.shape(), -1);
  const double scale = 1.0 / static_cast<double>(f.size());
  double peak = 0.0;
  for (cd& v : spec) {
    v *= scale;
    peak = std::max(peak, std::abs(v));
  }
  const double noise_floor = 1e-14 * peak;
  const double dxi = 1.0 / (2.0 * f.halfwidth());
  const int dim = f.dim();

  // Group occupied slots by their per-axis window tuple; DC slots are not in
  // any window.
  std::map<std::vector<int>, std::vector<std::size_t>> tuples;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  std::vector<int> key(static_cast<std::size_t>(dim));
  for (std::size_t flat = 0; flat < spec.size(); ++flat) {
    if (std::abs(spec[flat]) > noise_floor) {
      bool in_windows = true;
      for (int j = 0; j < dim; ++j) {
        const int m = slot_to_bin(static_cast<std::size_t>(idx[j]), f.shape()[j]);
        if (m == 0) {
          in_windows = false;
          break;
        }
        const double xi = m * dxi;
        key[j] = (xi > 0 ? 1 : -1) * (window_index(xi) + (1 << 16));
      }
      if (in_windows) tuples[key].push_back(flat);
    }
    for (int j = dim - 1; j >= 0; --j) {
      if (++idx[j] < f.shape()[j]) break;
      idx[j] = 0;
    }
  }

  std::vector<double> acc(f.size(), 0.0);
  std::vector<cd> buf(f.size());
  for (const auto& [tuple, slots] : tuples) {
    std::fill(buf.begin(), buf.end(), cd{0.0, 0.0});
    for (std::size_t s : slots) buf[s] = spec[s];
    dft_nd(buf, f.shape(), +1);
    for (std::size_t g = 0; g < buf.size(); ++g) acc[g] += std::norm(buf[g]);
  }

  std::vector<cd> out(f.size());
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = cd{std::sqrt(acc[g]), 0.0};
  return BandlimitedFn(f.halfwidth(), f.shape(), std::move(out), f.spectral_support());
}

BandlimitedFn poisson_extension(const BandlimitedFn& f, double t) {
  if (f.dim() != 1) throw std::invalid_argument("poisson_extension: expects a 1-D function");
  if (!(t > 0.0)) throw std::invalid_argument("poisson_extension: t must be positive");
  std::vector<cd> spec(f.samples().begin(), f.samples().end());
  dft_nd(spec, f.shape(), -1);
  const double dxi = 1.0 / (2.0 * f.halfwidth());
  const int r = f.shape()[0];
  const double scale = 1.0 / static_cast<double>(f.size());
  for (std::size_t s = 0; s < spec.size(); ++s) {
    const double xi = slot_to_bin(s, r) * dxi;
    spec[s] *= scale * std::exp(-2.0 * std::numbers::pi * t * std::abs(xi));
  }
  dft_nd(spec, f.shape(), +1);
  return BandlimitedFn(f.halfwidth(), f.shape(), std::move(spec), f.spectral_support());
}

BandlimitedFn nontangential_max(const BandlimitedFn& f, const ConeParams& cone) {
  if (f.dim() != 1) throw std::invalid_argument("nontangential_max: expects a 1-D function");
  if (!(cone.t_min > 0.0) || !(cone.t_max > cone.t_min))
    throw std::invalid_argument("nontangential_max: need 0 < t_min < t_max");
  if (cone.t_count < 1 || cone.x_count < 0) throw std::invalid_argument("nontangential_max: bad counts");

  const int r = f.shape()[0];
  const double dx = f.grid_step(0);
  std::vector<double> best(static_cast<std::size_t>(r), 0.0);

  for (int i = 0; i < cone.t_count; ++i) {
    const double frac = cone.t_count == 1 ? 0.0 : static_cast<double>(i) / (cone.t_count - 1);
    const double t = cone.t_min * std::pow(cone.t_max / cone.t_min, frac);
    const BandlimitedFn u = poisson_extension(f, t);
    // Strict aperture |x - x'| < t, clamped at the box edge.
    int radius = static_cast<int>(std::floor(t / dx));
    if (radius * dx >= t) --radius;
    radius = std::clamp(radius, 0, std::min(cone.x_count, r - 1));
    for (int j = 0; j < r; ++j) {
      const int lo = std::max(0, j - radius), hi = std::min(r - 1, j + radius);
      double m = 0.0;
      for (int q = lo; q <= hi; ++q) m = std::max(m, std::abs(u.samples()[static_cast<std::size_t>(q)]));
      best[static_cast<std::size_t>(j)] = std::max(best[static_cast<std::size_t>(j)], m);
    }
  }

  std::vector<cd> out(static_cast<std::size_t>(r));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = cd{best[j], 0.0};
  return BandlimitedFn(f.halfwidth(), f.shape(), std::move(out), f.spectral_support());
}

double lp_norm_line(const BandlimitedFn& f, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm_line: p must be >= 1");
  double cell = 1.0;
  for (int j = 0; j < f.dim(); ++j) cell *= f.grid_step(j);
  double acc = 0.0;
  for (cd v : f.samples()) acc += std::pow(std::abs(v), p);
  return std::pow(acc * cell, 1.0 / p);
}

}  // namespace lpsq
