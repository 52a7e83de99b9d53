#include "lpsq/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace lpsq {

namespace {

double defining_integral(std::span<const double> a, double lambda, double r) {
  double acc = 0.0;
  if (r == 0.0) {
    for (double v : a) acc += v;
    return acc / (lambda * static_cast<double>(a.size()));
  }
  if (r == 1.0) {
    for (double v : a) {
      const double t = v / lambda;
      acc += t * std::log1p(t);
    }
  } else if (r == 2.0) {
    for (double v : a) {
      const double t = v / lambda;
      const double l = std::log1p(t);
      acc += t * l * l;
    }
  } else {
    for (double v : a) {
      const double t = v / lambda;
      acc += t * std::pow(std::log1p(t), r);
    }
  }
  return acc / static_cast<double>(a.size());
}

// Kahan-compensated sum; the Khintchine p=2 identity is asserted to 1e-12
// over up to ~10^6 enumerated terms, which plain summation cannot deliver.
struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double orlicz_norm(std::span<const double> abs_values, const OrliczParams& params) {
  if (params.r < 0.0) throw std::invalid_argument("orlicz_norm: r must be >= 0");
  if (params.tol <= 0.0) throw std::invalid_argument("orlicz_norm: tol must be positive");
  if (!(params.bracket_lo > 0.0) || !(params.bracket_hi > params.bracket_lo))
    throw std::invalid_argument("orlicz_norm: bracket must be positive and ordered");
  if (abs_values.empty()) throw std::invalid_argument("orlicz_norm: empty sample set");

  double peak = 0.0;
  for (double v : abs_values) {
    if (!(v >= 0.0)) throw std::invalid_argument("orlicz_norm: negative or NaN modulus");
    peak = std::max(peak, v);
  }
  if (peak == 0.0) return 0.0;

  const double r = params.r;
  double lo = params.bracket_lo, hi = params.bracket_hi;
  while (defining_integral(abs_values, hi, r) > 1.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("orlicz_norm: bracket expansion overflow");
  }
  while (defining_integral(abs_values, lo, r) <= 1.0) {
    hi = lo;
    lo *= 0.5;
    if (lo < 1e-300) throw std::runtime_error("orlicz_norm: bracket expansion underflow");
  }
  // Invariant: integral(lo) > 1 >= integral(hi).
  while ((hi - lo) / hi > params.tol) {
    const double mid = 0.5 * (lo + hi);
    if (defining_integral(abs_values, mid, r) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double orlicz_norm(const GridFunction& g, const OrliczParams& params) {
  std::vector<double> a(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) a[i] = std::abs(g.at_flat(i));
  return orlicz_norm(a, params);
}

double weak_quasinorm(std::span<const double> abs_values) {
  if (abs_values.empty()) return 0.0;
  std::vector<double> a(abs_values.begin(), abs_values.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  const double n = static_cast<double>(a.size());
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // Last occurrence of a distinct value: count(|g| >= a[i]) = i + 1.
    if (i + 1 == a.size() || a[i + 1] != a[i]) {
      best = std::max(best, a[i] * static_cast<double>(i + 1) / n);
    }
  }
  return best;
}

double weak_quasinorm(const GridFunction& g) {
  std::vector<double> a(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) a[i] = std::abs(g.at_flat(i));
  return weak_quasinorm(a);
}

double khintchine_ratio(const TrigPoly& a, double p, const KhintchineOptions& opts) {
  if (p <= 0.0) throw std::invalid_argument("khintchine_ratio: p must be positive");
  if (a.empty()) throw std::invalid_argument("khintchine_ratio: empty coefficient set");
  const int d = a.dim();

  // Occupied Rademacher indices per axis, remapped to bit positions.
  std::vector<std::vector<int32_t>> occupied(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    auto n = a.exponent(i);
    for (int j = 0; j < d; ++j) {
      if (n[j] < 0) throw std::invalid_argument("khintchine_ratio: indices must lie in N_0^d");
      occupied[static_cast<std::size_t>(j)].push_back(n[j]);
    }
  }
  int total_bits = 0;
  std::vector<int> bit_offset(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    auto& v = occupied[static_cast<std::size_t>(j)];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    bit_offset[static_cast<std::size_t>(j)] = total_bits;
    total_bits += static_cast<int>(v.size());
  }

  // Per-term bit mask: the sign of the term is the parity of mask & pattern.
  const std::size_t terms = a.term_count();
  std::vector<uint64_t> mask(terms);
  double l2 = 0.0;
  for (std::size_t i = 0; i < terms; ++i) {
    auto n = a.exponent(i);
    uint64_t m = 0;
    for (int j = 0; j < d; ++j) {
      const auto& v = occupied[static_cast<std::size_t>(j)];
      const auto it = std::lower_bound(v.begin(), v.end(), n[j]);
      m |= uint64_t{1} << (bit_offset[static_cast<std::size_t>(j)] + (it - v.begin()));
    }
    mask[i] = m;
    l2 += std::norm(a.amplitude(i));
  }
  l2 = std::sqrt(l2);

  const auto chaos_value = [&](uint64_t pattern) {
    cd s{0.0, 0.0};
    for (std::size_t i = 0; i < terms; ++i) {
      const bool flip = std::popcount(mask[i] & pattern) & 1;
      s += flip ? -a.amplitude(i) : a.amplitude(i);
    }
    return std::abs(s);
  };

  Kahan acc;
  std::size_t count = 0;
  if (total_bits <= opts.enumeration_limit) {
    const uint64_t patterns = uint64_t{1} << total_bits;
    for (uint64_t pat = 0; pat < patterns; ++pat) {
      acc.add(std::pow(chaos_value(pat), p));
    }
    count = patterns;
  } else {
    std::mt19937_64 rng(opts.mc_seed);
    for (std::size_t s = 0; s < opts.mc_samples; ++s) {
      acc.add(std::pow(chaos_value(rng()), p));
    }
    count = opts.mc_samples;
  }
  const double moment = acc.sum / static_cast<double>(count);
  return std::pow(moment, 1.0 / p) / l2;
}

}  // namespace lpsq
