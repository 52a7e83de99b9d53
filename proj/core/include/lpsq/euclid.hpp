#pragma once

#include <functional>

#include "lpsq/trig_poly.hpp"

namespace lpsq {

// Band-limited function on the box [-L, L]^d, sampled uniformly (sample j
// along an axis of resolution R sits at x = -L + j * 2L/R) and carrying a
// declared per-axis spectral support. The box is treated as a period cell,
// so all spectral operators reuse the torus FFT machinery; faithful use
// requires the samples to have decayed near the boundary.
class BandlimitedFn {
 public:
  BandlimitedFn(double halfwidth, std::vector<int> shape, std::vector<cd> samples,
                std::vector<std::pair<double, double>> spectral_support);

  // 1-D construction from a continuum spectrum \hat f (bin frequencies
  // m/(2L), coefficient \hat f(xi) / (2L)).
  static BandlimitedFn from_spectrum_1d(double halfwidth, int resolution,
                                        const std::function<cd(double)>& spectrum_fn,
                                        std::pair<double, double> spectral_support);

  // Separable product of 1-D factors (matching halfwidths).
  static BandlimitedFn tensor(std::span<const BandlimitedFn> factors);

  int dim() const { return static_cast<int>(shape_.size()); }
  double halfwidth() const { return halfwidth_; }
  const std::vector<int>& shape() const { return shape_; }
  std::size_t size() const { return samples_.size(); }
  std::span<const cd> samples() const { return samples_; }
  std::span<cd> samples_mut() { return samples_; }
  const std::vector<std::pair<double, double>>& spectral_support() const { return spectral_support_; }

  double grid_step(int axis) const { return 2.0 * halfwidth_ / shape_[axis]; }
  // Grid coordinate along an axis.
  double coord(int axis, int index) const { return -halfwidth_ + grid_step(axis) * index; }
  // Largest boundary-sample modulus relative to the peak modulus.
  double boundary_decay() const;

 private:
  double halfwidth_;
  std::vector<int> shape_;
  std::vector<cd> samples_;
  std::vector<std::pair<double, double>> spectral_support_;
};

// Rough Littlewood-Paley projection along one axis: spectral multiplication
// by chi_{[2^k, 2^{k+1})} + chi_{(-2^{k+1}, -2^k]}.
BandlimitedFn rough_project(const BandlimitedFn& f, int k, int axis);

// Pointwise l2 sum over occupied d-tuples of rough dyadic windows. Bins at
// frequency exactly 0 belong to no window and are skipped.
BandlimitedFn euclid_square_function(const BandlimitedFn& f);

// Spectral multiplication by exp(-2 pi t |xi|): convolution with the
// unit-mass Poisson kernel (1/pi) t/(s^2 + t^2).
BandlimitedFn poisson_extension(const BandlimitedFn& f, double t);

// Truncated cone over each point: t on a geometric grid in [t_min, t_max],
// spatial offsets |x - x'| < t limited to x_count grid steps per side.
struct ConeParams {
  double t_min = 1e-3;
  double t_max = 1.0;
  int t_count = 32;
  int x_count = 1 << 28;
};

// N(f)(x) = max over the discretized cone of |(poisson_extension(f,t))(x')|.
BandlimitedFn nontangential_max(const BandlimitedFn& f, const ConeParams& cone);

// L^p norm with Lebesgue measure on the box: (sum |f|^p prod dx_j)^(1/p).
double lp_norm_line(const BandlimitedFn& f, double p);

}  // namespace lpsq
