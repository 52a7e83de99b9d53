#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "lpsq/fft.hpp"

namespace lpsq {

// Per-axis frequency bounds of a coefficient support; valid only while the
// owning polynomial has at least one term.
struct SupportBox {
  std::vector<int32_t> min;
  std::vector<int32_t> max;
};

// Trigonometric polynomial on the d-torus, stored as a sparse list of
// (lattice exponent, complex amplitude) pairs. Exponent tuples are kept
// lexicographically sorted and unique, and exact zeros are dropped, so two
// polynomials are equal iff their flat representations are equal.
class TrigPoly {
 public:
  explicit TrigPoly(int dim);

  // Builds a normalized polynomial from (possibly repeated) entries.
  static TrigPoly from_entries(int dim, std::span<const int32_t> exponents,
                               std::span<const cd> amplitudes);
  static TrigPoly constant(int dim, cd value);
  // Single unit-amplitude exponential e_n.
  static TrigPoly basis(std::span<const int32_t> n);

  int dim() const { return dim_; }
  std::size_t term_count() const { return vals_.size(); }
  bool empty() const { return vals_.empty(); }

  std::span<const int32_t> exponent(std::size_t i) const {
    return {exps_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  cd amplitude(std::size_t i) const { return vals_[i]; }
  std::span<const int32_t> exponents_flat() const { return exps_; }
  std::span<const cd> amplitudes() const { return vals_; }

  // Coefficient at lattice point n (zero when absent).
  cd coeff(std::span<const int32_t> n) const;

  const SupportBox& support() const;
  // max - min along one axis; zero for the empty polynomial.
  int64_t support_width(int axis) const;

  bool operator==(const TrigPoly& other) const = default;

 private:
  friend class TrigPolyBuilder;
  int dim_;
  std::vector<int32_t> exps_;  // dim_ * term_count() entries, lex sorted
  std::vector<cd> vals_;
  SupportBox box_;
};

// Incremental construction helper; build() sorts, merges duplicate
// exponents, drops exact zeros and computes the support box.
class TrigPolyBuilder {
 public:
  explicit TrigPolyBuilder(int dim);
  void add(std::span<const int32_t> n, cd value);
  void reserve(std::size_t terms);
  TrigPoly build() &&;

 private:
  int dim_;
  std::vector<int32_t> exps_;
  std::vector<cd> vals_;
};

// Complex samples on a uniform grid over the d-torus; sample j along an axis
// of resolution R sits at x = j/R. C-order storage, last axis fastest.
class GridFunction {
 public:
  GridFunction(std::vector<int> shape, std::vector<cd> samples);
  static GridFunction zeros(std::vector<int> shape);

  int dim() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  std::size_t size() const { return samples_.size(); }
  std::span<const cd> samples() const { return samples_; }
  std::span<cd> samples_mut() { return samples_; }
  cd at_flat(std::size_t i) const { return samples_[i]; }

 private:
  std::vector<int> shape_;
  std::vector<cd> samples_;
};

// Evaluates f on the grid via inverse FFT. Each resolution must be a power
// of two strictly exceeding the support width along its axis (coefficients
// are embedded modulo the resolution, so wider supports would alias).
GridFunction synthesize(const TrigPoly& f, std::span<const int> resolution);

// Forward FFT of the samples, normalized so analyze(synthesize(f, r)) == f
// whenever f's support lies in [-r/2, r/2) per axis. Frequencies at or above
// r/2 are reported as negative.
TrigPoly analyze(const GridFunction& g);

// L^p norm over the torus. p == 2 returns the exact Plancherel value; other
// p are Riemann means over a grid oversampled by `oversample` (>= 2) beyond
// the smallest power-of-two resolution holding the support.
double lp_norm(const TrigPoly& f, double p, int oversample = 8);

// L^p norm of grid samples: (mean |g|^p)^(1/p).
double lp_norm(const GridFunction& g, double p);

// \hat g(n_1,...,n_d) = prod_j \hat f_j(n_j); every factor must be 1-D.
TrigPoly tensor_product(std::span<const TrigPoly> factors);

// Frequency translation: \hat(out)(n) = \hat f(n - shift).
TrigPoly modulate(const TrigPoly& f, std::span<const int32_t> shift);

// True iff supp(\hat f) lies in N_0^d.
bool is_analytic(const TrigPoly& f);

}  // namespace lpsq
