#pragma once

#include <random>
#include <span>

#include "unicirc/spectrum.hpp"

namespace unicirc {

/// Deterministic random source. Raw 64-bit draws are mapped to doubles
/// explicitly so streams do not depend on the standard library's
/// distribution internals.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

/// Random trigonometric polynomial phase, rescaled to the requested sup norm.
inline std::vector<double> random_trig_phase(SeededRng& rng, int max_degree, double sup_bound, int n) {
  std::vector<double> a(static_cast<std::size_t>(max_degree) + 1), b(static_cast<std::size_t>(max_degree) + 1);
  for (int m = 1; m <= max_degree; ++m) {
    a[static_cast<std::size_t>(m)] = rng.uniform(-1.0, 1.0) / static_cast<double>(m);
    b[static_cast<std::size_t>(m)] = rng.uniform(-1.0, 1.0) / static_cast<double>(m);
  }
  std::vector<double> phi(static_cast<std::size_t>(n), 0.0);
  double sup = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(n);
    double v = 0.0;
    for (int m = 1; m <= max_degree; ++m)
      v += a[static_cast<std::size_t>(m)] * std::cos(m * t) + b[static_cast<std::size_t>(m)] * std::sin(m * t);
    phi[static_cast<std::size_t>(j)] = v;
    sup = std::max(sup, std::abs(v));
  }
  if (sup > 0.0)
    for (double& v : phi) v *= sup_bound / sup;
  return phi;
}

/// f(e^{it}) = e^{i (d t + phi(t))}: degree d carrier times a null-homotopic
/// phase factor. An empty phi means phi = 0.
inline UnimodularSamples winding_phase_map(int n, int degree, const std::vector<double>& phi = {}) {
  require(phi.empty() || static_cast<int>(phi.size()) == n, "winding_phase_map: phase grid mismatch");
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(n);
    const double ph = phi.empty() ? 0.0 : phi[static_cast<std::size_t>(j)];
    v[static_cast<std::size_t>(j)] = std::polar(1.0, degree * t + ph);
  }
  return UnimodularSamples(CircleSamples(std::move(v)), 1e-9);
}

/// Boundary samples of e^{-ikt} (a - e^{ikt}) / (1 - a e^{ikt}).
inline UnimodularSamples moebius_boundary(int n, double a, int k) {
  require(a > 0.0 && a < 1.0, "moebius_boundary: a must lie in (0, 1)");
  require(k >= 1, "moebius_boundary: k must be positive");
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(n);
    const cplx zk = std::polar(1.0, k * t);
    v[static_cast<std::size_t>(j)] = std::polar(1.0, -k * t) * (a - zk) / (1.0 - a * zk);
  }
  return UnimodularSamples(CircleSamples(std::move(v)), 1e-9);
}

/// Boundary evaluation of a finite product of disk-automorphism factors
/// (alpha - z) / (1 - conj(alpha) z).
inline cplx blaschke_eval(std::span<const cplx> zeros, cplx z) {
  cplx acc = 1.0;
  for (const cplx& alpha : zeros) acc *= (alpha - z) / (1.0 - std::conj(alpha) * z);
  return acc;
}

inline UnimodularSamples blaschke_boundary(int n, std::span<const cplx> zeros) {
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(n);
    v[static_cast<std::size_t>(j)] = blaschke_eval(zeros, std::polar(1.0, t));
  }
  return UnimodularSamples(CircleSamples(std::move(v)), 1e-9);
}

/// Continuous phase with a corner: phi(t) = fold(t)^2 / 4 on (-pi, pi].
inline std::vector<double> square_phase(int n) {
  std::vector<double> phi(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = wrap_angle(two_pi * static_cast<double>(j) / static_cast<double>(n));
    phi[static_cast<std::size_t>(j)] = t * t / 4.0;
  }
  return phi;
}

/// Piecewise-constant phase taking two values, jumping by `jump` at t = 0 and
/// t = pi. Not continuous; oscillation at fine scales stays near the jump.
inline UnimodularSamples two_arc_map(int n, double jump) {
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = two_pi * static_cast<double>(j) / static_cast<double>(n);
    v[static_cast<std::size_t>(j)] = std::polar(1.0, t < pi ? jump : 0.0);
  }
  return UnimodularSamples(CircleSamples(std::move(v)), 1e-9);
}

}  // namespace unicirc
