#pragma once

#include <map>
#include <optional>

#include "lpsq/trig_poly.hpp"

namespace lpsq {

// Dyadic block decomposition of the integer frequency line:
//   block 0   = {0}
//   block k   = [2^(k-1), 2^k - 1]          for k >= 1
//   block -k  = [-(2^k - 1), -2^(k-1)]      for k >= 1
int block_index(int32_t n);

struct BlockRange {
  int32_t lo;
  int32_t hi;
};
BlockRange block_range(int k);

// Restriction of f to frequencies whose `axis` coordinate lies in block k.
TrigPoly delta_project(const TrigPoly& f, int k, int axis);

// Bounded symbol m(n) on a declared integer range; individual points may be
// left undefined (sparse tables), and evaluating one throws.
class AxisSymbol {
 public:
  AxisSymbol(int32_t lo, std::vector<cd> values);
  AxisSymbol(int32_t lo, std::vector<cd> values, std::vector<char> defined);
  static AxisSymbol identity(int32_t lo, int32_t hi);
  static AxisSymbol from_table(const std::map<int32_t, cd>& entries);

  int32_t lo() const { return lo_; }
  int32_t hi() const { return lo_ + static_cast<int32_t>(values_.size()) - 1; }
  bool covers(int32_t n) const;
  cd operator()(int32_t n) const;
  double sup_norm() const { return sup_norm_; }

 private:
  int32_t lo_;
  std::vector<cd> values_;
  std::vector<char> defined_;  // empty means fully defined
  double sup_norm_;
};

// d-tuple of axis symbols encoding T_{m_1} x ... x T_{m_d}.
struct MultiplierSpec {
  std::vector<AxisSymbol> axes;
};

// +-1 sign per dyadic block index.
class SignPattern {
 public:
  explicit SignPattern(std::map<int, int> signs);
  int at(int block) const;  // throws if the block is not covered
  const std::map<int, int>& signs() const { return signs_; }

 private:
  std::map<int, int> signs_;
};

// Symbol m(n) = signs[block_index(n)] on [range_lo, range_hi].
AxisSymbol sign_symbol(const SignPattern& pattern, int32_t range_lo, int32_t range_hi);

// \hat(out)(n) = prod_j m_j(n_j) \hat f(n); throws if a symbol is undefined
// at a frequency in f's support.
TrigPoly apply_tensor_multiplier(const MultiplierSpec& spec, const TrigPoly& f);

// Literal evaluation of the periodic Marcinkiewicz variation constant
//   B_m = sup_{1<=k<=k_max} [ sum_{n=2^k-1}^{2^(k+1)}   |m(n+1)-m(n)|
//                           + sum_{n=-2^(k+1)}^{-2^k+1} |m(n+1)-m(n)| ].
// Requires m defined on [-2^(k_max+1)-1, 2^(k_max+1)+1].
double marcinkiewicz_constant(const AxisSymbol& m, int k_max);

// Pointwise l2 aggregation of all occupied d-fold dyadic block pieces,
// sampled at `resolution`. Pieces are synthesized one at a time and |.|^2
// accumulated; `threads` = 0 uses the hardware concurrency.
GridFunction square_function(const TrigPoly& f, std::span<const int> resolution,
                             unsigned threads = 0);

}  // namespace lpsq
