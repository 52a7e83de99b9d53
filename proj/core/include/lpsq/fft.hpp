#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lpsq {

using cd = std::complex<double>;

/// True iff n is a power of two (n >= 1).
constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

// In-place unnormalized DFT of power-of-two length.
//   sign = +1:  a[j] <- sum_k a[k] exp(+2*pi*i*j*k/n)   (synthesis direction)
//   sign = -1:  a[j] <- sum_k a[k] exp(-2*pi*i*j*k/n)   (analysis direction)
// Neither direction divides by n; callers apply their own normalization.
void dft_pow2(std::span<cd> a, int sign);

// Unnormalized multi-dimensional DFT over a C-order (last axis fastest)
// array with power-of-two extents. Same sign convention as dft_pow2.
void dft_nd(std::span<cd> data, std::span<const int> shape, int sign);

}  // namespace lpsq
