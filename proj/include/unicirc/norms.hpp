#pragma once

#include "unicirc/degree.hpp"

namespace unicirc {

enum class Side { one_sided, two_sided };

/// Parameters of the spectral smoothness sum. `n_cut`, when set, replaces the
/// weight base |n| by min(|n|, n_cut).
struct SobolevParams {
  double s = 0.5;
  Side side = Side::two_sided;
  std::optional<int> n_cut;
};

/// one-sided: sum_{n>=1} n^{2s} |a_n|^2; two-sided: sum over n != 0 of
/// |n|^{2s} |a_n|^2. The n=0 term always carries weight zero (seminorm).
inline double sobolev_spectral(const FourierCoeffs& coeffs, const SobolevParams& p) {
  require(p.s > 0.0 && std::isfinite(p.s), "sobolev_spectral: s must be finite and positive");
  double sum = 0.0;
  const int lo = p.side == Side::one_sided ? 1 : -coeffs.bandwidth;
  for (int n = lo; n <= coeffs.bandwidth; ++n) {
    if (n == 0) continue;
    double base = std::abs(static_cast<double>(n));
    if (p.n_cut) base = std::min(base, static_cast<double>(*p.n_cut));
    sum += std::pow(base, 2.0 * p.s) * std::norm(coeffs.coef(n));
  }
  return sum;
}

/// Quadrature form of the truncated smoothness sum:
///   iint |f(t1)-f(t2)|^2 * min(N^{1+2s}, ||t1-t2||^{-1-2s}) dt1 dt2
/// over the sample grid with the normalized measure dt/(2*pi) in each factor.
/// The diagonal contributes nothing (the difference vanishes there).
inline double sobolev_integral(const CircleSamples& f, double s, int freq_scale) {
  require(s > 0.0 && s < 1.0,
          "sobolev_integral: the integral and spectral forms are only equivalent for 0 < s < 1");
  require(freq_scale >= 1, "sobolev_integral: frequency scale must be positive");
  const int n = f.size();
  const std::vector<cplx> acf = autocorrelation(f.values);
  const double energy = acf[0].real();
  const double cap = std::pow(static_cast<double>(freq_scale), 1.0 + 2.0 * s);
  double total = 0.0;
  for (int d = 1; d < n; ++d) {
    const double sd = std::max(0.0, 2.0 * energy - 2.0 * acf[static_cast<std::size_t>(d)].real());
    const double dist = circle_dist(two_pi * static_cast<double>(d) / static_cast<double>(n));
    const double w = std::min(cap, std::pow(dist, -1.0 - 2.0 * s));
    total += w * sd;
  }
  return total / (static_cast<double>(n) * static_cast<double>(n));
}

namespace detail {

/// Wrapped-window mean and mean absolute deviation over the sample grid.
class WindowScan {
 public:
  explicit WindowScan(const std::vector<cplx>& values) : v_(&values), n_(static_cast<int>(values.size())) {
    prefix_.resize(static_cast<std::size_t>(2 * n_) + 1);
    prefix_[0] = 0.0;
    for (int j = 0; j < 2 * n_; ++j)
      prefix_[static_cast<std::size_t>(j) + 1] = prefix_[static_cast<std::size_t>(j)] + (*v_)[static_cast<std::size_t>(j % n_)];
  }

  cplx mean(int lo, int count) const {
    const int base = ((lo % n_) + n_) % n_;
    return (prefix_[static_cast<std::size_t>(base + count)] - prefix_[static_cast<std::size_t>(base)]) /
           static_cast<double>(count);
  }

  double mean_abs_dev(int lo, int count) const {
    const cplx mu = mean(lo, count);
    const int base = ((lo % n_) + n_) % n_;
    double acc = 0.0;
    for (int j = 0; j < count; ++j) acc += std::abs((*v_)[static_cast<std::size_t>((base + j) % n_)] - mu);
    return acc / static_cast<double>(count);
  }

  int grid_size() const { return n_; }

 private:
  const std::vector<cplx>* v_;
  int n_;
  std::vector<cplx> prefix_;
};

}  // namespace detail

/// Largest mean oscillation over the (center, width) grid. A grid maximum is
/// a lower bound of the true supremum; it refines monotonically as the grid
/// refines.
inline double bmo_norm(const CircleSamples& f, const std::vector<double>& centers,
                       const std::vector<double>& widths) {
  for (double w : widths)
    require(w > 0.0 && w <= pi, "bmo_norm: widths must lie in (0, pi]");
  const int n = f.size();
  const double h = two_pi / static_cast<double>(n);
  const detail::WindowScan scan(f.values);
  double best = 0.0;
  for (double c : centers) {
    const int jc = static_cast<int>(std::llround(c / h));
    for (double w : widths) {
      const int hw = static_cast<int>(std::floor(w / h + 1e-9));
      const int count = 2 * hw + 1;
      best = std::max(best, scan.mean_abs_dev(jc - hw, count));
    }
  }
  return best;
}

/// Default dyadic grid: 64 centers, 16 halving widths from pi down.
inline double bmo_norm(const CircleSamples& f) {
  std::vector<double> centers(64);
  for (int i = 0; i < 64; ++i) centers[static_cast<std::size_t>(i)] = two_pi * i / 64.0;
  std::vector<double> widths(16);
  double w = pi;
  for (int m = 0; m < 16; ++m, w *= 0.5) widths[static_cast<std::size_t>(m)] = w;
  return bmo_norm(f, centers, widths);
}

/// Per-scale oscillation data. `defect[m]` is the largest windowwise value of
/// 1 - |window mean|, and `slack_min` the smallest windowwise gap
/// oscillation - (1 - |mean|) seen anywhere: nonnegative for unimodular maps.
struct OscillationProfile {
  std::vector<double> scales;
  std::vector<double> osc;
  std::vector<double> defect;
  double slack_min = 0.0;
};

inline OscillationProfile vmo_profile(const CircleSamples& f, const std::vector<double>& scales) {
  for (std::size_t i = 1; i < scales.size(); ++i)
    require(scales[i] < scales[i - 1], "vmo_profile: scales must decrease");
  for (double w : scales) require(w > 0.0 && w <= pi, "vmo_profile: scales must lie in (0, pi]");

  const int n = f.size();
  const double h = two_pi / static_cast<double>(n);
  const detail::WindowScan scan(f.values);

  OscillationProfile prof;
  prof.scales = scales;
  prof.slack_min = std::numeric_limits<double>::infinity();
  for (double w : scales) {
    const int hw = static_cast<int>(std::floor(w / h + 1e-9));
    const int count = 2 * hw + 1;
    std::vector<double> osc_at(static_cast<std::size_t>(n));
    std::vector<double> defect_at(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t jc) {
      const double o = scan.mean_abs_dev(static_cast<int>(jc) - hw, count);
      osc_at[jc] = o;
      defect_at[jc] = 1.0 - std::abs(scan.mean(static_cast<int>(jc) - hw, count));
    });
    double osc_max = 0.0, defect_max = 0.0;
    for (int j = 0; j < n; ++j) {
      osc_max = std::max(osc_max, osc_at[static_cast<std::size_t>(j)]);
      defect_max = std::max(defect_max, defect_at[static_cast<std::size_t>(j)]);
      prof.slack_min = std::min(prof.slack_min, osc_at[static_cast<std::size_t>(j)] - defect_at[static_cast<std::size_t>(j)]);
    }
    prof.osc.push_back(osc_max);
    prof.defect.push_back(defect_max);
  }
  return prof;
}

/// Nonnegative coefficient weights on n >= 0.
struct WeightSeq {
  std::vector<double> omega;

  explicit WeightSeq(std::vector<double> w) : omega(std::move(w)) {
    require(!omega.empty(), "WeightSeq: empty weight sequence");
    for (double x : omega) require(x >= 0.0 && std::isfinite(x), "WeightSeq: weights must be finite and nonnegative");
  }

  static WeightSeq constant(double value, int len) {
    return WeightSeq(std::vector<double>(static_cast<std::size_t>(len), value));
  }
  static WeightSeq log_weight(int len) {
    std::vector<double> w(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = std::log(static_cast<double>(i) + 2.0);
    return WeightSeq(std::move(w));
  }
  static WeightSeq power_weight(double p, int len) {
    std::vector<double> w(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = std::pow(static_cast<double>(i) + 1.0, p);
    return WeightSeq(std::move(w));
  }

  bool grows() const { return omega.back() > omega.front(); }
};

/// ( sum_{n>=0} omega_n |a_n|^2 )^{1/2} over the analytic part.
inline double weighted_norm(const FourierCoeffs& coeffs, const WeightSeq& w) {
  require(static_cast<int>(w.omega.size()) >= coeffs.bandwidth + 1,
          "weighted_norm: weight sequence shorter than the coefficient band (need " +
              std::to_string(coeffs.bandwidth + 1) + " entries)");
  double sum = 0.0;
  for (int n = 0; n <= coeffs.bandwidth; ++n)
    sum += w.omega[static_cast<std::size_t>(n)] * std::norm(coeffs.coef(n));
  return std::sqrt(sum);
}

/// Small-phase projection bound: for f = e^{i phi} with a small H^{s'} phase,
/// the full seminorm of f is controlled by its analytic part, with constant 3.
struct ProjectionBoundReport {
  double s_prime = 0.0;
  double norm_phi = 0.0;
  double norm_f = 0.0;
  double norm_pf = 0.0;
  double norm_h = 0.0;  // h = f - 1 - i*phi
  double ratio = 0.0;   // norm_f / norm_pf
  bool bound_holds = false;
  bool h_small = false;
};

inline ProjectionBoundReport projection_bound_check(const std::vector<double>& phi, double s_prime) {
  require(s_prime > 0.0, "projection_bound_check: s' must be positive");
  const std::size_t n = phi.size();
  std::vector<cplx> phi_c(n), f(n), h(n);
  for (std::size_t j = 0; j < n; ++j) {
    phi_c[j] = phi[j];
    f[j] = std::polar(1.0, phi[j]);
    h[j] = f[j] - 1.0 - cplx(0.0, 1.0) * phi[j];
  }
  const int m = static_cast<int>(n) / 2 - 1;
  const FourierCoeffs phi_hat = analyze(CircleSamples(std::move(phi_c)), m);
  const SobolevParams two{s_prime, Side::two_sided, std::nullopt};
  const SobolevParams one{s_prime, Side::one_sided, std::nullopt};

  ProjectionBoundReport rep;
  rep.s_prime = s_prime;
  rep.norm_phi = std::sqrt(sobolev_spectral(phi_hat, two));
  require(rep.norm_phi < 0.1, "projection_bound_check: the phase seminorm " + std::to_string(rep.norm_phi) +
                                  " is not below 0.1; the bound is only claimed for small phases");
  const FourierCoeffs f_hat = analyze(CircleSamples(std::move(f)), m);
  const FourierCoeffs h_hat = analyze(CircleSamples(std::move(h)), m);
  rep.norm_f = std::sqrt(sobolev_spectral(f_hat, two));
  rep.norm_pf = std::sqrt(sobolev_spectral(f_hat, one));
  rep.norm_h = std::sqrt(sobolev_spectral(h_hat, two));
  rep.ratio = rep.norm_pf > 0.0 ? rep.norm_f / rep.norm_pf : 0.0;
  rep.bound_holds = rep.norm_f <= 3.0 * rep.norm_pf + 1e-14;
  rep.h_small = rep.norm_h <= 0.1 * rep.norm_phi + 1e-14;
  return rep;
}

}  // namespace unicirc
