#include "lpsq/multipliers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lpsq/parallel.hpp"

namespace lpsq {

int block_index(int32_t n) {
  if (n == 0) return 0;
  const uint32_t a = static_cast<uint32_t>(n > 0 ? n : -n);
  const int k = std::bit_width(a);  // floor(log2 a) + 1
  return n > 0 ? k : -k;
}

BlockRange block_range(int k) {
  if (k == 0) return {0, 0};
  const int a = std::abs(k);
  if (a > 30) throw std::invalid_argument("block_range: |k| too large for int32 frequencies");
  const int32_t lo = int32_t{1} << (a - 1);
  const int32_t hi = (int32_t{1} << a) - 1;
  return k > 0 ? BlockRange{lo, hi} : BlockRange{-hi, -lo};
}

TrigPoly delta_project(const TrigPoly& f, int k, int axis) {
  if (axis < 0 || axis >= f.dim()) throw std::invalid_argument("delta_project: axis out of range");
  TrigPolyBuilder b(f.dim());
  for (std::size_t i = 0; i < f.term_count(); ++i) {
    if (block_index(f.exponent(i)[axis]) == k) b.add(f.exponent(i), f.amplitude(i));
  }
  return std::move(b).build();
}

AxisSymbol::AxisSymbol(int32_t lo, std::vector<cd> values) : lo_(lo), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("AxisSymbol: empty value range");
  sup_norm_ = 0.0;
  for (cd v : values_) sup_norm_ = std::max(sup_norm_, std::abs(v));
}

AxisSymbol::AxisSymbol(int32_t lo, std::vector<cd> values, std::vector<char> defined)
    : lo_(lo), values_(std::move(values)), defined_(std::move(defined)) {
  if (values_.empty()) throw std::invalid_argument("AxisSymbol: empty value range");
  if (defined_.size() != values_.size()) throw std::invalid_argument("AxisSymbol: mask size mismatch");
  sup_norm_ = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (defined_[i]) sup_norm_ = std::max(sup_norm_, std::abs(values_[i]));
  }
}

AxisSymbol AxisSymbol::identity(int32_t lo, int32_t hi) {
  if (hi < lo) throw std::invalid_argument("AxisSymbol::identity: bad range");
  return AxisSymbol(lo, std::vector<cd>(static_cast<std::size_t>(hi - lo + 1), cd{1.0, 0.0}));
}

AxisSymbol AxisSymbol::from_table(const std::map<int32_t, cd>& entries) {
  if (entries.empty()) throw std::invalid_argument("AxisSymbol::from_table: empty table");
  const int32_t lo = entries.begin()->first;
  const int32_t hi = entries.rbegin()->first;
  std::vector<cd> vals(static_cast<std::size_t>(hi - lo + 1), cd{0.0, 0.0});
  std::vector<char> defined(vals.size(), 0);
  for (const auto& [n, v] : entries) {
    vals[static_cast<std::size_t>(n - lo)] = v;
    defined[static_cast<std::size_t>(n - lo)] = 1;
  }
  return AxisSymbol(lo, std::move(vals), std::move(defined));
}

bool AxisSymbol::covers(int32_t n) const {
  if (n < lo() || n > hi()) return false;
  return defined_.empty() || defined_[static_cast<std::size_t>(n - lo_)] != 0;
}

cd AxisSymbol::operator()(int32_t n) const {
  if (!covers(n)) throw std::out_of_range("AxisSymbol: symbol undefined at requested frequency");
  return values_[static_cast<std::size_t>(n - lo_)];
}

SignPattern::SignPattern(std::map<int, int> signs) : signs_(std::move(signs)) {
  for (const auto& [k, s] : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("SignPattern: signs must be +1 or -1");
  }
}

int SignPattern::at(int block) const {
  const auto it = signs_.find(block);
  if (it == signs_.end()) throw std::out_of_range("SignPattern: block not covered");
  return it->second;
}

AxisSymbol sign_symbol(const SignPattern& pattern, int32_t range_lo, int32_t range_hi) {
  if (range_hi < range_lo) throw std::invalid_argument("sign_symbol: bad range");
  std::vector<cd> vals(static_cast<std::size_t>(range_hi) - range_lo + 1);
  for (int32_t n = range_lo; n <= range_hi; ++n) {
    vals[static_cast<std::size_t>(n - range_lo)] = cd{static_cast<double>(pattern.at(block_index(n))), 0.0};
  }
  return AxisSymbol(range_lo, std::move(vals));
}

TrigPoly apply_tensor_multiplier(const MultiplierSpec& spec, const TrigPoly& f) {
  if (static_cast<int>(spec.axes.size()) != f.dim())
    throw std::invalid_argument("apply_tensor_multiplier: spec dimension mismatch");
  TrigPolyBuilder b(f.dim());
  b.reserve(f.term_count());
  for (std::size_t i = 0; i < f.term_count(); ++i) {
    auto n = f.exponent(i);
    cd v = f.amplitude(i);
    for (int j = 0; j < f.dim(); ++j) v *= spec.axes[static_cast<std::size_t>(j)](n[j]);
    b.add(n, v);
  }
  return std::move(b).build();
}

double marcinkiewicz_constant(const AxisSymbol& m, int k_max) {
  if (k_max < 1) throw std::invalid_argument("marcinkiewicz_constant: k_max must be >= 1");
  if (k_max > 29) throw std::invalid_argument("marcinkiewicz_constant: k_max too large");
  const int32_t need = (int32_t{1} << (k_max + 1)) + 1;
  if (!m.covers(need) || !m.covers(-need))
    throw std::invalid_argument("marcinkiewicz_constant: symbol range too short for k_max");

  double sup = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const int32_t a = int32_t{1} << k;
    const int32_t b = int32_t{1} << (k + 1);
    double sum = 0.0;
    for (int32_t n = a - 1; n <= b; ++n) sum += std::abs(m(n + 1) - m(n));
    for (int32_t n = -b; n <= -a + 1; ++n) sum += std::abs(m(n + 1) - m(n));
    sup = std::max(sup, sum);
  }
  return sup;
}

GridFunction square_function(const TrigPoly& f, std::span<const int> resolution, unsigned threads) {
  const int dim = f.dim();
  if (static_cast<int>(resolution.size()) != dim)
    throw std::invalid_argument("square_function: resolution rank must equal dim");

  GridFunction out = GridFunction::zeros(std::vector<int>(resolution.begin(), resolution.end()));
  if (f.empty()) return out;
  // Validate once; per-piece synthesis then cannot alias (piece support is a
  // subset of f's support).
  for (int j = 0; j < dim; ++j) {
    if (resolution[j] < 2 || !is_pow2(static_cast<std::size_t>(resolution[j])))
      throw std::invalid_argument("square_function: resolutions must be powers of two >= 2");
    if (f.support_width(j) >= resolution[j])
      throw std::invalid_argument("square_function: resolution too small for support width (aliasing)");
  }

  // Group terms by their d-tuple of block indices.
  const std::size_t terms = f.term_count();
  std::vector<int> tuple_key(terms * static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < terms; ++i) {
    auto n = f.exponent(i);
    for (int j = 0; j < dim; ++j) tuple_key[i * dim + j] = block_index(n[j]);
  }
  std::vector<std::size_t> order(terms);
  std::iota(order.begin(), order.end(), 0);
  auto tuple_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(tuple_key.begin() + a * dim, tuple_key.begin() + (a + 1) * dim,
                                        tuple_key.begin() + b * dim, tuple_key.begin() + (b + 1) * dim);
  };
  std::sort(order.begin(), order.end(), tuple_less);

  struct Piece {
    std::size_t begin;
    std::size_t end;  // half-open range into `order`
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < terms;) {
    std::size_t j = i + 1;
    while (j < terms && !tuple_less(order[i], order[j])) ++j;
    pieces.push_back({i, j});
    i = j;
  }

  const std::size_t grid = out.size();
  const unsigned workers = worker_count(pieces.size(), threads);
  std::vector<std::vector<double>> partial(workers, std::vector<double>(grid, 0.0));
  const std::vector<int> shape(resolution.begin(), resolution.end());

  parallel_chunks(pieces.size(), workers, [&](unsigned c, std::size_t lo, std::size_t hi) {
    std::vector<cd> buf(grid);
    auto& acc = partial[c];
    for (std::size_t pi = lo; pi < hi; ++pi) {
      std::fill(buf.begin(), buf.end(), cd{0.0, 0.0});
      for (std::size_t oi = pieces[pi].begin; oi < pieces[pi].end; ++oi) {
        const std::size_t term = order[oi];
        auto n = f.exponent(term);
        std::size_t flat = 0;
        for (int j = 0; j < dim; ++j) {
          const int r = shape[j];
          const int32_t m = ((n[j] % r) + r) % r;
          flat = flat * static_cast<std::size_t>(r) + static_cast<std::size_t>(m);
        }
        buf[flat] += f.amplitude(term);
      }
      dft_nd(buf, shape, +1);
      for (std::size_t g = 0; g < grid; ++g) acc[g] += std::norm(buf[g]);
    }
  });

  auto data = out.samples_mut();
  for (unsigned c = 0; c < workers; ++c) {
    const auto& acc = partial[c];
    for (std::size_t g = 0; g < grid; ++g) data[g] += cd{acc[g], 0.0};
  }
  for (std::size_t g = 0; g < grid; ++g) data[g] = cd{std::sqrt(data[g].real()), 0.0};
  return out;
}

}  // namespace lpsq
