#pragma once

#include <optional>

#include "unicirc/spectrum.hpp"

namespace unicirc {

/// Continuous argument lift of nonvanishing boundary samples. `winding` is
/// the net branch count accumulated around the circle; `max_step` the largest
/// single-step phase increment met while unwrapping.
struct PhaseLift {
  std::vector<double> values;
  int winding = 0;
  double max_step = 0.0;
};

/// Unwraps by nearest-branch selection. A step of +-pi between consecutive
/// samples is ambiguous and rejected as unresolved.
inline PhaseLift phase_lift(const CircleSamples& s) {
  const int n = s.size();
  PhaseLift lift;
  lift.values.resize(static_cast<std::size_t>(n));

  double prev_raw = 0.0;
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    const cplx z = s.values[static_cast<std::size_t>(j)];
    require(std::abs(z) > 0.0, "phase_lift: vanishing sample at index " + std::to_string(j));
    const double raw = std::arg(z);
    if (j == 0) {
      lift.values[0] = raw;
    } else {
      const double step = wrap_angle(raw - prev_raw);
      lift.max_step = std::max(lift.max_step, std::abs(step));
      lift.values[static_cast<std::size_t>(j)] = lift.values[static_cast<std::size_t>(j - 1)] + step;
    }
    prev_raw = raw;
  }
  const double closing = wrap_angle(std::arg(s.values[0]) - prev_raw);
  lift.max_step = std::max(lift.max_step, std::abs(closing));
  require(lift.max_step < pi * (1.0 - 1e-12),
          "phase_lift: insufficient resolution, phase step " + std::to_string(lift.max_step) +
              " >= pi between consecutive samples; increase the sample count");
  total = lift.values[static_cast<std::size_t>(n - 1)] + closing - lift.values[0];
  lift.winding = static_cast<int>(std::llround(total / two_pi));
  return lift;
}

struct WindingResult {
  int degree = 0;
  double max_step = 0.0;
};

/// Topological degree as the total increment of the argument lift over 2*pi.
inline WindingResult degree_winding(const UnimodularSamples& f) {
  const PhaseLift lift = phase_lift(f.base);
  return {lift.winding, lift.max_step};
}

/// Spectral degree sum_n n |a_n|^2 with its rounding diagnostics.
struct DegreeResult {
  double spectral_sum = 0.0;
  int rounded = 0;
  double residual = 0.0;
  double tail_energy = 0.0;  // sum_{|n| > 0.9 M} |n| |a_n|^2
  bool tail_warning = false;
  std::optional<int> winding;

  bool agreement() const { return winding.has_value() && *winding == rounded; }
};

inline DegreeResult degree_brezis(const FourierCoeffs& coeffs, double tail_threshold = 1e-6) {
  DegreeResult r;
  double two_sided = 0.0;
  const int m = coeffs.bandwidth;
  const double tail_lo = 0.9 * static_cast<double>(m);
  for (int n = -m; n <= m; ++n) {
    const double w = std::norm(coeffs.coef(n));
    r.spectral_sum += static_cast<double>(n) * w;
    two_sided += std::abs(static_cast<double>(n)) * w;
    if (std::abs(static_cast<double>(n)) > tail_lo) r.tail_energy += std::abs(static_cast<double>(n)) * w;
  }
  r.rounded = static_cast<int>(std::llround(r.spectral_sum));
  r.residual = std::abs(r.spectral_sum - static_cast<double>(r.rounded));
  r.tail_warning = r.tail_energy > tail_threshold * std::max(1.0, two_sided);
  return r;
}

/// For a degree-zero map the two-sided weighted sum equals twice the
/// analytic-side sum. Reports both sides.
struct SymmetryReport {
  double two_sided = 0.0;
  double doubled_analytic = 0.0;
  double gap = 0.0;
};

inline SymmetryReport check_symmetry_identity(const FourierCoeffs& coeffs) {
  const DegreeResult d = degree_brezis(coeffs);
  require(d.rounded == 0, "check_symmetry_identity: input has degree " + std::to_string(d.rounded) +
                              "; the identity only holds for degree-zero maps");
  SymmetryReport rep;
  for (int n = -coeffs.bandwidth; n <= coeffs.bandwidth; ++n) {
    const double w = std::norm(coeffs.coef(n));
    rep.two_sided += std::abs(static_cast<double>(n)) * w;
    if (n > 0) rep.doubled_analytic += 2.0 * static_cast<double>(n) * w;
  }
  rep.gap = std::abs(rep.two_sided - rep.doubled_analytic);
  return rep;
}

/// Index shift a_n -> a_{n+d} (multiplication of the map by z^{-d}).
/// Mass shifted beyond the band is dropped and its energy reported.
struct ShiftResult {
  FourierCoeffs coeffs;
  double truncated_energy = 0.0;
};

inline ShiftResult normalize_degree(const FourierCoeffs& coeffs, int d) {
  const int m = coeffs.bandwidth;
  require(std::abs(d) <= m, "normalize_degree: |shift| exceeds the bandwidth");
  ShiftResult out{FourierCoeffs(m), 0.0};
  for (int n = -m; n <= m; ++n) {
    const cplx v = coeffs.coef(n);
    const int target = n - d;
    if (target < -m || target > m)
      out.truncated_energy += std::norm(v);
    else
      out.coeffs.at(target) = v;
  }
  return out;
}

}  // namespace unicirc
