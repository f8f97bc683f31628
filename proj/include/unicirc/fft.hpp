#pragma once

#include <algorithm>
#include <utility>

#include "unicirc/common.hpp"

namespace unicirc {

/// In-place radix-2 transform. Forward kernel e^{-2*pi*i*jk/N}, no
/// normalization; callers scale by 1/N where the analysis direction needs it.
inline void fft_radix2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  require(is_pow2(n), "fft: length must be a power of two, got " + std::to_string(n));
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  std::vector<cplx> w;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    w.resize(half);
    const double ang = sign * two_pi / static_cast<double>(len);
    for (std::size_t j = 0; j < half; ++j) w[j] = std::polar(1.0, ang * static_cast<double>(j));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + half] * w[j];
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
}

inline std::vector<cplx> fft(std::vector<cplx> v) {
  fft_radix2(v, false);
  return v;
}

/// Unscaled inverse: sum_k X_k e^{+2*pi*i*jk/N}.
inline std::vector<cplx> ifft_unscaled(std::vector<cplx> v) {
  fft_radix2(v, true);
  return v;
}

/// Circular autocorrelation A[d] = sum_j v[(j+d) mod N] * conj(v[j]).
inline std::vector<cplx> autocorrelation(const std::vector<cplx>& v) {
  std::vector<cplx> spec = fft(v);
  for (auto& z : spec) z = std::norm(z);
  std::vector<cplx> acf = ifft_unscaled(std::move(spec));
  const double inv_n = 1.0 / static_cast<double>(v.size());
  for (auto& z : acf) z *= inv_n;
  return acf;
}

}  // namespace unicirc
