#pragma once

#include <limits>
#include <optional>

#include "unicirc/fft.hpp"

namespace unicirc {

/// Open-ended frequency bound for project().
inline constexpr int freq_inf = std::numeric_limits<int>::max();
inline constexpr int freq_neg_inf = std::numeric_limits<int>::min();

/// Uniform boundary samples: values[j] = F(e^{i*2*pi*j/N}), N a power of two.
struct CircleSamples {
  std::vector<cplx> values;

  explicit CircleSamples(std::vector<cplx> v) : values(std::move(v)) {
    require(values.size() >= 4, "CircleSamples: need at least 4 samples");
    require(is_pow2(values.size()), "CircleSamples: sample count must be a power of two");
    for (const cplx& z : values)
      require(std::isfinite(z.real()) && std::isfinite(z.imag()),
              "CircleSamples: non-finite sample");
  }

  int size() const { return static_cast<int>(values.size()); }
  double angle(int j) const { return two_pi * static_cast<double>(j) / static_cast<double>(size()); }
};

/// Boundary samples constrained to the unit circle up to `tol`.
struct UnimodularSamples {
  CircleSamples base;
  double tol;

  explicit UnimodularSamples(CircleSamples s, double tolerance = 1e-6)
      : base(std::move(s)), tol(tolerance) {
    double worst = 0.0;
    for (const cplx& z : base.values) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
    require(worst <= tol, "UnimodularSamples: modulus deviates from 1 by " + std::to_string(worst) +
                              " (tol " + std::to_string(tol) + ")");
  }

  int size() const { return base.size(); }
};

/// Coefficients on the symmetric band [-M, M], stored at index n+M.
struct FourierCoeffs {
  int bandwidth = 0;  // M
  std::vector<cplx> values;

  explicit FourierCoeffs(int m) : bandwidth(m), values(2 * static_cast<std::size_t>(m) + 1) {
    require(m >= 0, "FourierCoeffs: bandwidth must be nonnegative");
  }

  cplx coef(int n) const {
    if (n < -bandwidth || n > bandwidth) return {0.0, 0.0};
    return values[static_cast<std::size_t>(n + bandwidth)];
  }
  cplx& at(int n) { return values[static_cast<std::size_t>(n + bandwidth)]; }

  /// sum |a_n|^2 over the whole band.
  double energy() const {
    double e = 0.0;
    for (const cplx& z : values) e += std::norm(z);
    return e;
  }
};

/// sum_{n in [lo, hi]} |a_n|^2, clipped to the stored band.
inline double band_energy(const FourierCoeffs& c, int lo, int hi) {
  const int a = std::max(lo, -c.bandwidth);
  const int b = std::min(hi, c.bandwidth);
  double e = 0.0;
  for (int n = a; n <= b; ++n) e += std::norm(c.coef(n));
  return e;
}

enum class SmootherFamily { fejer, vallee_poussin };

/// Mean-1 summability kernel. epsilon in (0,1] maps to cutoff order
/// ceil(1/epsilon); coefficients are real, in [0,1], and exactly 1 at n=0.
struct SmootherSpec {
  SmootherFamily family = SmootherFamily::vallee_poussin;
  double epsilon = 1.0;

  SmootherSpec() = default;
  SmootherSpec(SmootherFamily fam, double eps) : family(fam), epsilon(eps) {
    require(epsilon > 0.0 && epsilon <= 1.0, "SmootherSpec: epsilon must lie in (0, 1]");
  }

  int cutoff() const { return static_cast<int>(std::ceil(1.0 / epsilon)); }

  double weight(int n) const {
    const double m = static_cast<double>(cutoff());
    const double an = std::abs(static_cast<double>(n));
    if (family == SmootherFamily::fejer) return std::max(0.0, 1.0 - an / (m + 1.0));
    // de la Vallee Poussin: flat through |n| <= m, linear to zero at 2m.
    return std::min(1.0, std::max(0.0, 2.0 - an / m));
  }
};

namespace detail {
inline int signed_frequency(int k, int n) { return k <= n / 2 ? k : k - n; }
}  // namespace detail

/// Coefficients a_n = (1/N) sum_j samples[j] e^{-i n 2 pi j / N} for |n| <= M.
/// Exact for trigonometric polynomials of degree <= N/2 - 1.
inline FourierCoeffs analyze(const CircleSamples& samples, int m) {
  const int n = samples.size();
  require(m >= 0, "analyze: bandwidth must be nonnegative");
  require(2 * m + 1 <= n, "analyze: band [-" + std::to_string(m) + ", " + std::to_string(m) +
                              "] exceeds the Nyquist range of " + std::to_string(n) +
                              " samples; coefficients would alias");
  std::vector<cplx> spec = fft(samples.values);
  FourierCoeffs out(m);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (int freq = -m; freq <= m; ++freq) {
    const int k = ((freq % n) + n) % n;
    out.at(freq) = spec[static_cast<std::size_t>(k)] * inv_n;
  }
  return out;
}

/// samples[j] = sum_n a_n e^{i n 2 pi j / N}; exact inverse of analyze.
inline CircleSamples synthesize(const FourierCoeffs& coeffs, int n) {
  require(n >= 2 * coeffs.bandwidth + 2, "synthesize: need at least 2M+2 samples, got " +
                                             std::to_string(n));
  require(is_pow2(static_cast<std::size_t>(n)), "synthesize: sample count must be a power of two");
  std::vector<cplx> bins(static_cast<std::size_t>(n));
  for (int freq = -coeffs.bandwidth; freq <= coeffs.bandwidth; ++freq) {
    const int k = ((freq % n) + n) % n;
    bins[static_cast<std::size_t>(k)] += coeffs.coef(freq);
  }
  return CircleSamples(ifft_unscaled(std::move(bins)));
}

/// Indicator restriction of the coefficient vector to [lo, hi]. Idempotent;
/// an empty intersection yields the zero vector.
inline FourierCoeffs project(const FourierCoeffs& coeffs, int lo, int hi) {
  require(lo <= hi, "project: empty range (lo > hi)");
  FourierCoeffs out(coeffs.bandwidth);
  const int a = std::max(lo, -coeffs.bandwidth);
  const int b = std::min(hi, coeffs.bandwidth);
  for (int n = a; n <= b; ++n) out.at(n) = coeffs.coef(n);
  return out;
}

/// Conjugate-function multiplier: a_n -> -i sgn(n) a_n, a_0 -> 0.
inline FourierCoeffs hilbert(const FourierCoeffs& coeffs) {
  FourierCoeffs out(coeffs.bandwidth);
  const cplx mi(0.0, -1.0);
  for (int n = -coeffs.bandwidth; n <= coeffs.bandwidth; ++n) {
    if (n > 0)
      out.at(n) = mi * coeffs.coef(n);
    else if (n < 0)
      out.at(n) = -mi * coeffs.coef(n);
  }
  return out;
}

/// Conjugate function of real samples, computed through the full resolvable
/// band. The unpaired Nyquist bin is zeroed.
inline std::vector<double> hilbert_real(const std::vector<double>& u) {
  const std::size_t n = u.size();
  std::vector<cplx> buf(n);
  for (std::size_t j = 0; j < n; ++j) buf[j] = u[j];
  fft_radix2(buf, false);
  const cplx mi(0.0, -1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const int freq = detail::signed_frequency(static_cast<int>(k), static_cast<int>(n));
    if (freq > 0 && k != n / 2)
      buf[k] *= mi;
    else if (freq < 0)
      buf[k] *= -mi;
    else
      buf[k] = 0.0;
  }
  fft_radix2(buf, true);
  std::vector<double> out(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = buf[j].real() * inv_n;
  return out;
}

/// Convolution with the kernel: coefficientwise product with its weights.
inline CircleSamples smooth(const CircleSamples& f, const SmootherSpec& spec) {
  const int n = f.size();
  std::vector<cplx> buf = fft(f.values);
  for (int k = 0; k < n; ++k)
    buf[static_cast<std::size_t>(k)] *= spec.weight(detail::signed_frequency(k, n));
  fft_radix2(buf, true);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (auto& z : buf) z *= inv_n;
  return CircleSamples(std::move(buf));
}

}  // namespace unicirc
