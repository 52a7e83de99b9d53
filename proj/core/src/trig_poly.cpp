#include "lpsq/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lpsq {

namespace {

// Lexicographic compare of two dim-length exponent tuples.
bool lex_less(const int32_t* a, const int32_t* b, int dim) {
  for (int j = 0; j < dim; ++j) {
    if (a[j] != b[j]) return a[j] < b[j];
  }
  return false;
}

}  // namespace

TrigPoly::TrigPoly(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("TrigPoly: dim must be >= 1");
}

TrigPoly TrigPoly::from_entries(int dim, std::span<const int32_t> exponents,
                                std::span<const cd> amplitudes) {
  if (exponents.size() != amplitudes.size() * static_cast<std::size_t>(dim))
    throw std::invalid_argument("TrigPoly::from_entries: exponent/amplitude size mismatch");
  TrigPolyBuilder b(dim);
  b.reserve(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    b.add(exponents.subspan(i * dim, dim), amplitudes[i]);
  }
  return std::move(b).build();
}

TrigPoly TrigPoly::constant(int dim, cd value) {
  std::vector<int32_t> zero(static_cast<std::size_t>(dim), 0);
  return from_entries(dim, zero, std::span<const cd>(&value, 1));
}

TrigPoly TrigPoly::basis(std::span<const int32_t> n) {
  const cd one{1.0, 0.0};
  return from_entries(static_cast<int>(n.size()), n, std::span<const cd>(&one, 1));
}

cd TrigPoly::coeff(std::span<const int32_t> n) const {
  if (static_cast<int>(n.size()) != dim_) throw std::invalid_argument("TrigPoly::coeff: bad index size");
  std::size_t lo = 0, hi = term_count();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int32_t* key = exps_.data() + mid * static_cast<std::size_t>(dim_);
    if (lex_less(key, n.data(), dim_)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < term_count() && std::equal(n.begin(), n.end(), exponent(lo).begin())) return vals_[lo];
  return {0.0, 0.0};
}

const SupportBox& TrigPoly::support() const {
  if (empty()) throw std::logic_error("TrigPoly::support: empty polynomial has no support box");
  return box_;
}

int64_t TrigPoly::support_width(int axis) const {
  if (empty()) return 0;
  return static_cast<int64_t>(box_.max[axis]) - static_cast<int64_t>(box_.min[axis]);
}

TrigPolyBuilder::TrigPolyBuilder(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("TrigPolyBuilder: dim must be >= 1");
}

void TrigPolyBuilder::reserve(std::size_t terms) {
  exps_.reserve(terms * static_cast<std::size_t>(dim_));
  vals_.reserve(terms);
}

void TrigPolyBuilder::add(std::span<const int32_t> n, cd value) {
  if (static_cast<int>(n.size()) != dim_) throw std::invalid_argument("TrigPolyBuilder::add: bad index size");
  exps_.insert(exps_.end(), n.begin(), n.end());
  vals_.push_back(value);
}

TrigPoly TrigPolyBuilder::build() && {
  const std::size_t n = vals_.size();
  const int dim = dim_;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const int32_t* e = exps_.data();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(e + a * dim, e + b * dim, dim);
  });

  TrigPoly out(dim);
  out.exps_.reserve(exps_.size());
  out.vals_.reserve(n);
  for (std::size_t idx = 0; idx < n;) {
    const std::size_t i = order[idx];
    cd sum = vals_[i];
    std::size_t j = idx + 1;
    while (j < n && !lex_less(e + i * dim, e + order[j] * dim, dim)) {
      sum += vals_[order[j]];
      ++j;
    }
    if (sum != cd{0.0, 0.0}) {
      out.exps_.insert(out.exps_.end(), e + i * dim, e + (i + 1) * dim);
      out.vals_.push_back(sum);
    }
    idx = j;
  }

  if (!out.vals_.empty()) {
    out.box_.min.assign(out.exps_.begin(), out.exps_.begin() + dim);
    out.box_.max = out.box_.min;
    for (std::size_t i = 1; i < out.vals_.size(); ++i) {
      for (int jx = 0; jx < dim; ++jx) {
        const int32_t v = out.exps_[i * dim + jx];
        out.box_.min[jx] = std::min(out.box_.min[jx], v);
        out.box_.max[jx] = std::max(out.box_.max[jx], v);
      }
    }
  }
  return out;
}

GridFunction::GridFunction(std::vector<int> shape, std::vector<cd> samples)
    : shape_(std::move(shape)), samples_(std::move(samples)) {
  std::size_t total = 1;
  for (int r : shape_) {
    if (r < 2 || !is_pow2(static_cast<std::size_t>(r)))
      throw std::invalid_argument("GridFunction: resolutions must be powers of two >= 2");
    total *= static_cast<std::size_t>(r);
  }
  if (shape_.empty() || total != samples_.size())
    throw std::invalid_argument("GridFunction: sample count does not match resolutions");
}

GridFunction GridFunction::zeros(std::vector<int> shape) {
  std::size_t total = 1;
  for (int r : shape) total *= static_cast<std::size_t>(std::max(r, 0));
  return GridFunction(std::move(shape), std::vector<cd>(total));
}

GridFunction synthesize(const TrigPoly& f, std::span<const int> resolution) {
  const int dim = f.dim();
  if (static_cast<int>(resolution.size()) != dim)
    throw std::invalid_argument("synthesize: resolution rank must equal dim");
  for (int j = 0; j < dim; ++j) {
    if (resolution[j] < 2 || !is_pow2(static_cast<std::size_t>(resolution[j])))
      throw std::invalid_argument("synthesize: resolutions must be powers of two >= 2");
    if (!f.empty() && f.support_width(j) >= resolution[j])
      throw std::invalid_argument("synthesize: resolution too small for support width (aliasing)");
  }

  std::vector<int> shape(resolution.begin(), resolution.end());
  GridFunction g = GridFunction::zeros(shape);
  auto data = g.samples_mut();
  for (std::size_t i = 0; i < f.term_count(); ++i) {
    auto n = f.exponent(i);
    std::size_t flat = 0;
    for (int j = 0; j < dim; ++j) {
      const int r = resolution[j];
      const int32_t m = ((n[j] % r) + r) % r;
      flat = flat * static_cast<std::size_t>(r) + static_cast<std::size_t>(m);
    }
    data[flat] += f.amplitude(i);
  }
  dft_nd(data, shape, +1);
  return g;
}

TrigPoly analyze(const GridFunction& g) {
  std::vector<cd> spec(g.samples().begin(), g.samples().end());
  dft_nd(spec, g.shape(), -1);
  const double scale = 1.0 / static_cast<double>(g.size());
  const int dim = g.dim();

  TrigPolyBuilder b(dim);
  std::vector<int32_t> n(static_cast<std::size_t>(dim));
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  for (std::size_t flat = 0; flat < spec.size(); ++flat) {
    const cd v = spec[flat] * scale;
    if (v != cd{0.0, 0.0}) {
      for (int j = 0; j < dim; ++j) {
        const int r = g.shape()[j];
        n[j] = idx[j] < r / 2 ? idx[j] : idx[j] - r;
      }
      b.add(n, v);
    }
    for (int j = dim - 1; j >= 0; --j) {
      if (++idx[j] < g.shape()[j]) break;
      idx[j] = 0;
    }
  }
  return std::move(b).build();
}

double lp_norm(const TrigPoly& f, double p, int oversample) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (f.empty()) return 0.0;
  if (p == 2.0) {
    double s = 0.0;
    for (cd v : f.amplitudes()) s += std::norm(v);
    return std::sqrt(s);
  }
  if (oversample < 2) throw std::invalid_argument("lp_norm: oversample must be >= 2");
  std::vector<int> res(static_cast<std::size_t>(f.dim()));
  for (int j = 0; j < f.dim(); ++j) {
    const auto base = next_pow2(static_cast<std::size_t>(f.support_width(j)) + 1);
    res[j] = static_cast<int>(std::max<std::size_t>(2, base * next_pow2(static_cast<std::size_t>(oversample))));
  }
  return lp_norm(synthesize(f, res), p);
}

double lp_norm(const GridFunction& g, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  double acc = 0.0;
  if (p == 1.0) {
    for (cd v : g.samples()) acc += std::abs(v);
  } else if (p == 2.0) {
    for (cd v : g.samples()) acc += std::norm(v);
  } else {
    for (cd v : g.samples()) acc += std::pow(std::abs(v), p);
  }
  return std::pow(acc / static_cast<double>(g.size()), 1.0 / p);
}

TrigPoly tensor_product(std::span<const TrigPoly> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_product: needs at least one factor");
  for (const auto& f : factors) {
    if (f.dim() != 1) throw std::invalid_argument("tensor_product: all factors must be 1-D");
  }
  const int d = static_cast<int>(factors.size());
  std::size_t terms = 1;
  for (const auto& f : factors) terms *= f.term_count();

  TrigPoly out(d);
  TrigPolyBuilder b(d);
  b.reserve(terms);
  if (terms == 0) return std::move(b).build();

  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  std::vector<int32_t> n(static_cast<std::size_t>(d));
  while (true) {
    cd v{1.0, 0.0};
    for (int j = 0; j < d; ++j) {
      n[j] = factors[j].exponent(idx[j])[0];
      v *= factors[j].amplitude(idx[j]);
    }
    b.add(n, v);
    int j = d - 1;
    for (; j >= 0; --j) {
      if (++idx[j] < factors[j].term_count()) break;
      idx[j] = 0;
    }
    if (j < 0) break;
  }
  return std::move(b).build();
}

TrigPoly modulate(const TrigPoly& f, std::span<const int32_t> shift) {
  if (static_cast<int>(shift.size()) != f.dim()) throw std::invalid_argument("modulate: shift rank mismatch");
  TrigPolyBuilder b(f.dim());
  b.reserve(f.term_count());
  std::vector<int32_t> n(static_cast<std::size_t>(f.dim()));
  for (std::size_t i = 0; i < f.term_count(); ++i) {
    auto e = f.exponent(i);
    for (int j = 0; j < f.dim(); ++j) n[j] = e[j] + shift[j];
    b.add(n, f.amplitude(i));
  }
  return std::move(b).build();
}

bool is_analytic(const TrigPoly& f) {
  for (int32_t e : f.exponents_flat()) {
    if (e < 0) return false;
  }
  return true;
}

}  // namespace lpsq
