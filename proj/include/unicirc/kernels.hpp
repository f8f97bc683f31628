#pragma once

#include <array>

#include "unicirc/norms.hpp"

namespace unicirc {

/// Even C^2 bump carried by [-2, 2]: equal to (2-|x|)^{2s} for 1 <= |x| <= 2,
/// and an even quartic a + b x^2 + c x^4 on |x| < 1 matching value and first
/// two derivatives at |x| = 1. The quartic is decreasing from a >= 1 to 1 on
/// [0, 1], so positivity holds; it is still scanned at construction.
struct KernelSpec {
  int freq_scale = 1;  // N
  double s = 0.5;
  std::array<double, 3> blend{0.0, 0.0, 0.0};  // {a, b, c}

  KernelSpec(int n, double exponent) : freq_scale(n), s(exponent) {
    require(n >= 1, "KernelSpec: frequency scale must be positive");
    require(s > 0.0 && s < 1.0, "KernelSpec: exponent must lie in (0, 1)");
    const double c = s * s / 2.0;
    const double b = -(s + s * s);
    const double a = 1.0 - b - c;
    blend = {a, b, c};
    for (int i = 0; i <= 10000; ++i) {
      const double x = static_cast<double>(i) / 10000.0;
      require(a + b * x * x + c * x * x * x * x > 0.0,
              "KernelSpec: blend polynomial lost positivity at x = " + std::to_string(x));
    }
  }
};

inline double gs_eval(const KernelSpec& spec, double x) {
  const double ax = std::abs(x);
  if (ax >= 2.0) return 0.0;
  if (ax >= 1.0) return std::pow(2.0 - ax, 2.0 * spec.s);
  const double x2 = ax * ax;
  return spec.blend[0] + spec.blend[1] * x2 + spec.blend[2] * x2 * x2;
}

/// integral of g_s over the real line (exact, for Riemann-sum checks).
inline double gs_integral(const KernelSpec& spec) {
  return 2.0 * (spec.blend[0] + spec.blend[1] / 3.0 + spec.blend[2] / 5.0 + 1.0 / (2.0 * spec.s + 1.0));
}

/// K_{N,s}(t) = sum_{|n| <= 2N} g_s(n/N) e^{int}, tabulated by direct
/// summation so off-grid t values stay exact. `fitted_c` is the empirical
/// decay constant max |K| / (N * min(1, (N ||t||)^{-1-2s})) over the grid.
struct KnsTable {
  std::vector<double> t;
  std::vector<double> value;
  std::vector<double> majorant;
  std::vector<double> ratio;
  double fitted_c = 0.0;
  double max_imag = 0.0;
};

inline KnsTable kns_table(const KernelSpec& spec, const std::vector<double>& grid) {
  const int n_scale = spec.freq_scale;
  const int reach = 2 * n_scale;
  std::vector<double> weights(static_cast<std::size_t>(reach) + 1);
  for (int n = 0; n <= reach; ++n)
    weights[static_cast<std::size_t>(n)] = gs_eval(spec, static_cast<double>(n) / static_cast<double>(n_scale));

  KnsTable table;
  table.t = grid;
  table.value.resize(grid.size());
  table.majorant.resize(grid.size());
  table.ratio.resize(grid.size());
  std::vector<double> imag(grid.size());

  parallel_for(grid.size(), [&](std::size_t i) {
    const double t = grid[i];
    // incremental rotation over n = -2N..2N
    const cplx rot = std::polar(1.0, t);
    cplx e = std::polar(1.0, -static_cast<double>(reach) * t);
    cplx acc = 0.0;
    for (int n = -reach; n <= reach; ++n) {
      acc += weights[static_cast<std::size_t>(std::abs(n))] * e;
      e *= rot;
    }
    const double dist = circle_dist(t);
    const double arg = static_cast<double>(n_scale) * dist;
    const double maj = static_cast<double>(n_scale) * std::min(1.0, std::pow(arg, -1.0 - 2.0 * spec.s));
    table.value[i] = acc.real();
    imag[i] = std::abs(acc.imag());
    table.majorant[i] = maj;
    table.ratio[i] = std::abs(acc.real()) / maj;
  });

  for (std::size_t i = 0; i < grid.size(); ++i) {
    table.fitted_c = std::max(table.fitted_c, table.ratio[i]);
    table.max_imag = std::max(table.max_imag, imag[i]);
  }
  return table;
}

/// Shifted weight N^{2s} g_s(n/N - 2): equal to n^{2s} on 0 <= n <= N,
/// nonnegative everywhere, zero outside 0 <= n <= 4N.
inline double delta_ns(const KernelSpec& spec, long n) {
  if (n < 0 || n > 4L * spec.freq_scale) return 0.0;
  const double x = static_cast<double>(n) / static_cast<double>(spec.freq_scale) - 2.0;
  return std::pow(static_cast<double>(spec.freq_scale), 2.0 * spec.s) * gs_eval(spec, x);
}

/// Symmetric / antisymmetric weighted coefficient sums
///   I = sum (D(n) + D(-n)) |a_n|^2,  J = sum (D(n) - D(-n)) |a_n|^2.
struct IJPair {
  double symmetric = 0.0;      // I
  double antisymmetric = 0.0;  // J
  int freq_scale = 0;
  double s = 0.0;
};

inline IJPair ij_sums(const FourierCoeffs& coeffs, const KernelSpec& spec) {
  require(4 * spec.freq_scale <= coeffs.bandwidth,
          "ij_sums: bandwidth must cover the weight support [0, 4N]");
  IJPair out{0.0, 0.0, spec.freq_scale, spec.s};
  for (int n = -coeffs.bandwidth; n <= coeffs.bandwidth; ++n) {
    const double w = std::norm(coeffs.coef(n));
    if (w == 0.0) continue;
    const double dp = delta_ns(spec, n);
    const double dm = delta_ns(spec, -n);
    out.symmetric += (dp + dm) * w;
    out.antisymmetric += (dp - dm) * w;
  }
  return out;
}

/// Antisymmetric sum computed two ways (spectral weights vs the double
/// integral against sin(2Nt) K_{N,s}(t)), with the cubic-increment majorant
///   iint |phi(t1)-phi(t2)|^3 * min(N^{1+2s}, ||t1-t2||^{-1-2s}) dt1 dt2
/// and the mean-zero check on sin(2Nt) K_{N,s}(t).
struct JnReport {
  double j_spectral = 0.0;
  double j_integral = 0.0;
  double spectral_gap = 0.0;  // |j_spectral - j_integral|
  double majorant = 0.0;
  double ratio = 0.0;  // |j_integral| / majorant
  double mean_residual = 0.0;
};

inline JnReport jn_bound_check(const PhaseLift& phi, const KernelSpec& spec) {
  require(phi.winding == 0, "jn_bound_check: phase lift must come from a degree-zero map");
  const int n = static_cast<int>(phi.values.size());
  require(is_pow2(static_cast<std::size_t>(n)) && n >= 4, "jn_bound_check: grid must be a power of two");
  const int n_scale = spec.freq_scale;
  require(4 * n_scale <= n / 2 - 1,
          "jn_bound_check: grid too coarse for the weight support; need > 8N samples");

  std::vector<cplx> f(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) f[static_cast<std::size_t>(j)] = std::polar(1.0, phi.values[static_cast<std::size_t>(j)]);

  // kernel values on the offset grid
  std::vector<double> offsets(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) offsets[static_cast<std::size_t>(d)] = two_pi * static_cast<double>(d) / static_cast<double>(n);
  const KnsTable kt = kns_table(spec, offsets);

  const std::vector<cplx> acf = autocorrelation(f);
  const double n2s = std::pow(static_cast<double>(n_scale), 2.0 * spec.s);
  const double cap = std::pow(static_cast<double>(n_scale), 1.0 + 2.0 * spec.s);

  JnReport rep;
  double mean_acc = 0.0;
  std::vector<double> cubic(static_cast<std::size_t>(n), 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t d) {
    if (d == 0) return;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double diff = std::abs(phi.values[static_cast<std::size_t>((static_cast<int>(d) + j) % n)] -
                                   phi.values[static_cast<std::size_t>(j)]);
      acc += diff * diff * diff;
    }
    const double dist = circle_dist(offsets[d]);
    cubic[d] = acc * std::min(cap, std::pow(dist, -1.0 - 2.0 * spec.s));
  });
  for (int d = 0; d < n; ++d) {
    const double sin2n = std::sin(2.0 * static_cast<double>(n_scale) * offsets[static_cast<std::size_t>(d)]);
    rep.j_integral += 2.0 * n2s * sin2n * kt.value[static_cast<std::size_t>(d)] *
                      acf[static_cast<std::size_t>(d)].imag();
    mean_acc += sin2n * kt.value[static_cast<std::size_t>(d)];
    rep.majorant += cubic[static_cast<std::size_t>(d)];
  }
  const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  rep.j_integral *= inv_n2;
  rep.majorant *= inv_n2;
  rep.mean_residual = std::abs(mean_acc) / static_cast<double>(n);

  const FourierCoeffs coeffs = analyze(CircleSamples(std::move(f)), n / 2 - 1);
  rep.j_spectral = ij_sums(coeffs, spec).antisymmetric;
  rep.spectral_gap = std::abs(rep.j_spectral - rep.j_integral);
  rep.ratio = rep.majorant > 0.0 ? std::abs(rep.j_integral) / rep.majorant : 0.0;
  return rep;
}

}  // namespace unicirc
