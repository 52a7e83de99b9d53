#include "lpsq/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpsq {

std::size_t next_pow2(std::size_t n) {
  std::size_t r = 1;
  while (r < n) r <<= 1;
  return r;
}

namespace {

// Twiddle table for a transform of length n: w[k] = exp(sign*2*pi*i*k/n),
// k in [0, n/2). Rebuilt per call; the nd driver shares one table per axis.
std::vector<cd> twiddles(std::size_t n, int sign) {
  std::vector<cd> w(n / 2);
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    w[k] = std::polar(1.0, step * static_cast<double>(k));
  }
  return w;
}

void bit_reverse_permute(std::span<cd> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

void dft_pow2_with_table(std::span<cd> a, const std::vector<cd>& w) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  bit_reverse_permute(a);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cd t = a[i + k + len / 2] * w[k * stride];
        a[i + k + len / 2] = a[i + k] - t;
        a[i + k] += t;
      }
    }
  }
}

}  // namespace

void dft_pow2(std::span<cd> a, int sign) {
  if (!is_pow2(a.size())) throw std::invalid_argument("dft_pow2: length must be a power of two");
  const auto w = twiddles(a.size(), sign);
  dft_pow2_with_table(a, w);
}

void dft_nd(std::span<cd> data, std::span<const int> shape, int sign) {
  std::size_t total = 1;
  for (int r : shape) {
    if (r < 1 || !is_pow2(static_cast<std::size_t>(r)))
      throw std::invalid_argument("dft_nd: extents must be powers of two");
    total *= static_cast<std::size_t>(r);
  }
  if (total != data.size()) throw std::invalid_argument("dft_nd: shape/data size mismatch");

  const int dim = static_cast<int>(shape.size());
  // Transform one axis at a time; lines are gathered into a contiguous
  // scratch buffer so the butterfly kernel always runs stride-1.
  std::size_t inner = 1;  // product of extents after the current axis
  for (int axis = dim - 1; axis >= 0; --axis) {
    const std::size_t n = static_cast<std::size_t>(shape[axis]);
    const std::size_t outer = total / (n * inner);
    const auto w = twiddles(n, sign);
    if (inner == 1) {
      for (std::size_t o = 0; o < outer; ++o) {
        dft_pow2_with_table(data.subspan(o * n, n), w);
      }
    } else {
      std::vector<cd> line(n);
      for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < inner; ++i) {
          cd* base = data.data() + o * n * inner + i;
          for (std::size_t k = 0; k < n; ++k) line[k] = base[k * inner];
          dft_pow2_with_table(line, w);
          for (std::size_t k = 0; k < n; ++k) base[k * inner] = line[k];
        }
      }
    }
    inner *= n;
  }
}

}  // namespace lpsq
