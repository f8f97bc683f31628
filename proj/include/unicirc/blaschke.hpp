#pragma once

#include "unicirc/maps.hpp"
#include "unicirc/norms.hpp"

namespace unicirc {

/// One stage of a dilated product: a finite zero set and its dilation order.
struct BlaschkeStage {
  std::vector<cplx> zeros;
  int nu = 1;
};

/// Stages of prod_j B_j(z^{nu_j}) with a divisibility-chained dilation
/// sequence and all zeros strictly inside the disk.
struct BlaschkeSpec {
  std::vector<BlaschkeStage> stages;

  explicit BlaschkeSpec(std::vector<BlaschkeStage> st) : stages(std::move(st)) {
    for (std::size_t i = 0; i < stages.size(); ++i) {
      require(stages[i].nu >= 1, "BlaschkeSpec: dilation orders must be positive");
      for (const cplx& z : stages[i].zeros)
        require(std::abs(z) < 1.0, "BlaschkeSpec: zeros must lie strictly inside the disk");
      if (i > 0)
        require(stages[i].nu % stages[i - 1].nu == 0,
                "BlaschkeSpec: each dilation order must divide the next");
    }
  }

  /// Boundary value of the full product at z = e^{it}.
  cplx boundary(double t) const {
    cplx acc = 1.0;
    for (const auto& st : stages)
      acc *= blaschke_eval(st.zeros, std::polar(1.0, static_cast<double>(st.nu) * t));
    return acc;
  }
};

/// Taylor coefficients of prod (alpha_j - z)/(1 - conj(alpha_j) z) through
/// boundary sampling. Zeros within 1e-6 of the boundary are rejected: their
/// coefficient tails decay too slowly to resolve at a finite grid.
inline FourierCoeffs blaschke_coeffs(std::span<const cplx> zeros, int m) {
  for (const cplx& z : zeros)
    require(std::abs(z) < 1.0 - 1e-6, "blaschke_coeffs: zero too close to the boundary (aliasing)");
  const int n = static_cast<int>(next_pow2(4 * (static_cast<std::size_t>(m) + 1)));
  return analyze(blaschke_boundary(n, zeros).base, m);
}

/// Coefficient dilation a_n -> coefficient at n*nu; boundary map becomes
/// B(e^{i nu t}). Weighted norms with nondecreasing weights never decrease.
inline FourierCoeffs dilate(const FourierCoeffs& coeffs, int nu, int max_bandwidth = (1 << 22)) {
  require(nu >= 1, "dilate: dilation order must be positive");
  const long target = static_cast<long>(nu) * coeffs.bandwidth;
  require(target <= max_bandwidth,
          "dilate: dilated bandwidth " + std::to_string(target) + " exceeds capacity " +
              std::to_string(max_bandwidth));
  FourierCoeffs out(static_cast<int>(target));
  for (int n = -coeffs.bandwidth; n <= coeffs.bandwidth; ++n) out.at(n * nu) = coeffs.coef(n);
  return out;
}

/// Closed-form coefficients of e^{-ikt} (a - e^{ikt}) / (1 - a e^{ikt}):
///   a at n = -k, and -(1-a^2) a^j at n = jk for j >= 0.
/// Degree-zero by construction. Requires bandwidth M >= 4k/(1-a) so the
/// dropped geometric tail is negligible.
struct MoebiusParams {
  double a = 0.5;
  int k = 1;
};

inline FourierCoeffs moebius_family(const MoebiusParams& p, int m) {
  require(p.a > 0.0 && p.a < 1.0, "moebius_family: a must lie in (0, 1)");
  require(p.k >= 1, "moebius_family: k must be a positive integer");
  require(4.0 * p.k / (1.0 - p.a) <= static_cast<double>(m),
          "moebius_family: bandwidth below the tail-control floor 4k/(1-a)");
  FourierCoeffs out(m);
  out.at(-p.k) = p.a;
  const double scale = -(1.0 - p.a * p.a);
  double pw = 1.0;
  for (int j = 0; static_cast<long>(j) * p.k <= m; ++j, pw *= p.a) out.at(j * p.k) = scale * pw;
  return out;
}

/// Coefficients of the complex conjugate map: b_n = conj(a_{-n}).
inline FourierCoeffs conjugate_reflect(const FourierCoeffs& coeffs) {
  FourierCoeffs out(coeffs.bandwidth);
  for (int n = -coeffs.bandwidth; n <= coeffs.bandwidth; ++n) out.at(n) = std::conj(coeffs.coef(-n));
  return out;
}

/// Candidate pools for the greedy construction.
struct R1Options {
  std::vector<double> radii{0.5, 0.7, 0.9, 0.95, 0.99};
  std::vector<int> multipliers{2, 3, 4, 8};
  int base_bandwidth = 256;
};

struct R1Result {
  std::vector<BlaschkeStage> stages;
  std::vector<double> trace;  // weighted norms of the truncated partial products
  bool complete = false;
  std::string diagnostic;
};

namespace detail {
inline double truncated_product_norm(const std::vector<BlaschkeStage>& stages, int m,
                                     const WeightSeq& w) {
  const BlaschkeSpec spec(stages);
  const int n = static_cast<int>(next_pow2(4 * (static_cast<std::size_t>(m) + 1)));
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    v[static_cast<std::size_t>(j)] = spec.boundary(two_pi * static_cast<double>(j) / static_cast<double>(n));
  return weighted_norm(analyze(CircleSamples(std::move(v)), m), w);
}
}  // namespace detail

/// Greedy divergence witness: stage by stage, appends a single-zero factor
/// B_r(z^{nu}) with the smallest chained dilation whose truncated partial
/// product grows the weighted norm by the requested factor. The truncation
/// bandwidth doubles per stage. The opening stage takes the radius with the
/// smallest norm, leaving the most headroom under the Parseval ceiling
/// sqrt(max omega): a unimodular boundary map has unit coefficient energy, so
/// no weighted norm can exceed that ceiling, and with slowly growing weights
/// the requested growth becomes unreachable; the partial trace then returns
/// with a diagnostic instead of an artificial witness.
inline R1Result r1_construct(const WeightSeq& w, int stage_count, double growth,
                             const R1Options& opt = {}) {
  require(stage_count >= 1, "r1_construct: need at least one stage");
  require(growth > 0.0, "r1_construct: growth factor must be positive");
  for (std::size_t i = 1; i < w.omega.size(); ++i)
    require(w.omega[i] >= w.omega[i - 1] - 1e-12,
            "r1_construct: weight must be nondecreasing on its prefix");
  const int final_bandwidth = opt.base_bandwidth << (stage_count - 1);
  require(static_cast<int>(w.omega.size()) >= final_bandwidth + 1,
          "r1_construct: weight prefix shorter than the final bandwidth " +
              std::to_string(final_bandwidth + 1));

  R1Result result;
  // opening factor: radius of least norm, undilated
  {
    double best = std::numeric_limits<double>::infinity();
    double best_r = opt.radii.front();
    for (double r : opt.radii) {
      std::vector<BlaschkeStage> trial{{{cplx(r, 0.0)}, 1}};
      const double norm = detail::truncated_product_norm(trial, opt.base_bandwidth, w);
      if (norm < best) {
        best = norm;
        best_r = r;
      }
    }
    result.stages.push_back({{cplx(best_r, 0.0)}, 1});
    result.trace.push_back(best);
  }

  for (int stage = 2; stage <= stage_count; ++stage) {
    const int m = opt.base_bandwidth << (stage - 1);
    const int prev_nu = result.stages.back().nu;
    bool found = false;
    for (int mult : opt.multipliers) {
      const int nu = prev_nu * mult;
      for (double r : opt.radii) {
        std::vector<BlaschkeStage> trial = result.stages;
        trial.push_back({{cplx(r, 0.0)}, nu});
        const double norm = detail::truncated_product_norm(trial, m, w);
        if (norm >= growth * result.trace.back()) {
          result.stages = std::move(trial);
          result.trace.push_back(norm);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      result.diagnostic = "stage " + std::to_string(stage) +
                          ": no candidate factor reaches growth " + std::to_string(growth) +
                          "; the weight grows too slowly for the candidate set";
      return result;
    }
  }
  result.complete = true;
  return result;
}

/// One row of the counterexample sweep: spectral sums of the family map (or
/// its conjugate) at the given (a, k).
struct SweepRow {
  double a = 0.0;
  int k = 0;
  double one_sided = 0.0;
  double two_sided = 0.0;
};

struct SlopeFit {
  double slope = 0.0;
  double residual = 0.0;  // max absolute deviation from the fitted line
};

namespace detail {
inline SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(y[i] - fit.slope * x[i] - intercept));
  return fit;
}
}  // namespace detail

/// Log-log scaling table over the (a, k) product grid.
///  - slope_gap: d log ||analytic part|| / d log(1-a), per fixed k, averaged
///    (the norm, i.e. half the slope of the one-sided sum);
///  - slope_k: d log(two-sided sum) / d log k, per fixed a, averaged;
///  - slope_invgap (conjugate mode): d log(two-sided sum) / d log(1/(1-a)).
struct SweepTable {
  double s = 0.0;
  bool conjugate = false;
  std::vector<SweepRow> rows;
  std::optional<SlopeFit> slope_gap;
  std::optional<SlopeFit> slope_k;
  std::optional<SlopeFit> slope_invgap;
  double one_sided_ratio = 0.0;  // max/min of the one-sided column
};

inline SweepTable scaling_sweep(double s, const std::vector<double>& a_grid,
                                const std::vector<int>& k_grid, bool conjugate) {
  require(s > 0.0 && s < 1.0, "scaling_sweep: s must lie in (0, 1)");
  require(std::abs(s - 0.5) > 1e-12, "scaling_sweep: exponent fits are degenerate at s = 1/2");
  require(a_grid.size() >= 3 || k_grid.size() >= 3,
          "scaling_sweep: need at least 3 points along the varying grid");
  require(!a_grid.empty() && !k_grid.empty(), "scaling_sweep: empty grid");

  SweepTable table;
  table.s = s;
  table.conjugate = conjugate;
  const SobolevParams one{s, Side::one_sided, std::nullopt};
  const SobolevParams two{s, Side::two_sided, std::nullopt};

  double os_min = std::numeric_limits<double>::infinity(), os_max = 0.0;
  for (double a : a_grid) {
    for (int k : k_grid) {
      // bandwidth covering the geometric tail well past the 4k/(1-a) floor
      const int tail_terms = static_cast<int>(std::ceil(48.0 / (1.0 - a * a))) + 64;
      const int m = tail_terms * k;
      const FourierCoeffs base = moebius_family({a, k}, m);
      const FourierCoeffs coeffs = conjugate ? conjugate_reflect(base) : base;
      SweepRow row;
      row.a = a;
      row.k = k;
      row.one_sided = sobolev_spectral(coeffs, one);
      row.two_sided = sobolev_spectral(coeffs, two);
      table.rows.push_back(row);
      os_min = std::min(os_min, row.one_sided);
      os_max = std::max(os_max, row.one_sided);
    }
  }
  table.one_sided_ratio = os_min > 0.0 ? os_max / os_min : 0.0;

  if (a_grid.size() >= 3) {
    SlopeFit gap_acc{0.0, 0.0}, inv_acc{0.0, 0.0};
    for (int k : k_grid) {
      std::vector<double> xg, yg, xi, yi;
      for (const SweepRow& r : table.rows) {
        if (r.k != k) continue;
        xg.push_back(std::log(1.0 - r.a));
        yg.push_back(0.5 * std::log(r.one_sided));
        xi.push_back(-std::log(1.0 - r.a));
        yi.push_back(std::log(r.two_sided));
      }
      const SlopeFit g = detail::fit_line(xg, yg);
      const SlopeFit v = detail::fit_line(xi, yi);
      gap_acc.slope += g.slope;
      gap_acc.residual = std::max(gap_acc.residual, g.residual);
      inv_acc.slope += v.slope;
      inv_acc.residual = std::max(inv_acc.residual, v.residual);
    }
    gap_acc.slope /= static_cast<double>(k_grid.size());
    inv_acc.slope /= static_cast<double>(k_grid.size());
    if (conjugate)
      table.slope_invgap = inv_acc;
    else
      table.slope_gap = gap_acc;
  }
  if (k_grid.size() >= 3) {
    SlopeFit acc{0.0, 0.0};
    for (double a : a_grid) {
      std::vector<double> x, y;
      for (const SweepRow& r : table.rows) {
        if (r.a != a) continue;
        x.push_back(std::log(static_cast<double>(r.k)));
        y.push_back(std::log(r.two_sided));
      }
      const SlopeFit f = detail::fit_line(x, y);
      acc.slope += f.slope;
      acc.residual = std::max(acc.residual, f.residual);
    }
    acc.slope /= static_cast<double>(a_grid.size());
    table.slope_k = acc;
  }
  return table;
}

}  // namespace unicirc
