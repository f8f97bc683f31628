#include <doctest.h>

#include "unicirc/maps.hpp"
#include "unicirc/pipeline.hpp"

using namespace unicirc;

namespace {

std::vector<double> sine_phase(int n, double amp, int mode = 1) {
  std::vector<double> phi(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) phi[static_cast<std::size_t>(j)] = amp * std::sin(mode * two_pi * j / n);
  return phi;
}

}  // namespace

TEST_CASE("polar splits modulus and lift") {
  const UnimodularSamples f = winding_phase_map(256, 2);
  const PolarParts uni = polar(f.base);
  for (double r : uni.rho) CHECK(r == doctest::Approx(1.0));
  CHECK(uni.phi.winding == 2);

  std::vector<cplx> half(256);
  for (int j = 0; j < 256; ++j) half[static_cast<std::size_t>(j)] = 0.5 * std::polar(1.0, two_pi * j / 256.0);
  const PolarParts scaled = polar(CircleSamples(std::move(half)));
  for (double r : scaled.rho) CHECK(r == doctest::Approx(0.5));
  CHECK(scaled.phi.winding == 1);

  // reconstruction rho * e^{i phi} = h
  const UnimodularSamples g = winding_phase_map(512, 0, sine_phase(512, 1.2));
  const CircleSamples h = smooth(g.base, SmootherSpec(SmootherFamily::vallee_poussin, 1.0 / 16));
  const PolarParts parts = polar(h);
  for (int j = 0; j < 512; ++j) {
    const cplx rebuilt = parts.rho[static_cast<std::size_t>(j)] *
                         std::polar(1.0, parts.phi.values[static_cast<std::size_t>(j)]);
    CHECK(std::abs(rebuilt - h.values[static_cast<std::size_t>(j)]) < 1e-10);
  }
  CHECK(parts.phi.winding == 0);

  // collapsed modulus is rejected
  std::vector<cplx> tiny(64, cplx(0.1, 0.0));
  CHECK_THROWS_AS((void)polar(CircleSamples(std::move(tiny))), error);
}

TEST_CASE("smoothing pulls the modulus toward one") {
  const UnimodularSamples f = winding_phase_map(1024, 0, sine_phase(1024, 1.5, 3));
  const CircleSamples h = smooth(f.base, SmootherSpec(SmootherFamily::vallee_poussin, 1.0 / 32));
  double dev = 0.0;
  for (const cplx& z : h.values) dev = std::max(dev, std::abs(1.0 - std::abs(z)));
  CHECK(dev < 0.1);
}

TEST_CASE("outer factor of the trivial modulus is one") {
  std::vector<double> ones(128, 1.0);
  const CircleSamples r = outer(ones);
  for (const cplx& z : r.values) CHECK(std::abs(z - 1.0) < 1e-12);
  std::vector<double> bad(128, 1.0);
  bad[7] = 0.0;
  CHECK_THROWS_AS((void)outer(bad), error);
}

TEST_CASE("outer factor of a linear-factor modulus matches the closed form") {
  const int n = 512;
  std::vector<double> rho(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    rho[static_cast<std::size_t>(j)] = std::abs(1.0 - 0.5 * std::polar(1.0, two_pi * j / n));
  const CircleSamples r = outer(rho);
  // |R| rho = 1 pointwise, spectrum in n <= 0, and R (1 - 0.5 e^{-it}) is a
  // unimodular constant
  cplx first;
  for (int j = 0; j < n; ++j) {
    const cplx z = r.values[static_cast<std::size_t>(j)];
    CHECK(std::abs(std::abs(z) * rho[static_cast<std::size_t>(j)] - 1.0) < 1e-8);
    const cplx prod = z * (1.0 - 0.5 * std::polar(1.0, -two_pi * j / n));
    if (j == 0) first = prod;
    CHECK(std::abs(prod - first) < 1e-8);
  }
  CHECK(std::abs(std::abs(first) - 1.0) < 1e-8);
  const FourierCoeffs rc = analyze(r, n / 2 - 1);
  CHECK(band_energy(rc, 1, freq_inf) < 1e-8 * rc.energy());
}

TEST_CASE("outer factors of random smooth moduli are anti-analytic") {
  SeededRng rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 1024;
    const std::vector<double> u = random_trig_phase(rng, 8, 0.2, n);
    std::vector<double> rho(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) rho[j] = std::exp(u[j]);
    const FourierCoeffs rc = analyze(outer(rho), n / 2 - 1);
    CHECK(band_energy(rc, 1, freq_inf) < 1e-8 * rc.energy());
  }
}

TEST_CASE("corrected map is unimodular and close to a smooth source") {
  const int n = 2048;
  const UnimodularSamples f = winding_phase_map(n, 0, sine_phase(n, 0.5));
  const UnimodularSamples h = build_H(f, 1.0 / 64);
  double sup = 0.0;
  for (int j = 0; j < n; ++j)
    sup = std::max(sup, std::abs(h.base.values[static_cast<std::size_t>(j)] -
                                 f.base.values[static_cast<std::size_t>(j)]));
  CHECK(sup < 0.05);
}

TEST_CASE("pure powers pass through the flat band untouched") {
  const UnimodularSamples f = winding_phase_map(256, 3);
  const UnimodularSamples h = build_H(f, 1.0 / 8);  // cutoff 8 > 3
  for (int j = 0; j < 256; ++j)
    CHECK(std::abs(h.base.values[static_cast<std::size_t>(j)] -
                   f.base.values[static_cast<std::size_t>(j)]) < 1e-10);
}

TEST_CASE("the correction preserves winding on gated stages") {
  SeededRng rng(53);
  const int n = 1024;
  const PipelineConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    const UnimodularSamples f =
        winding_phase_map(n, 0, random_trig_phase(rng, 8, rng.uniform(0.2, 1.2), n));
    for (double eps : cfg.eps_schedule) {
      const CircleSamples h = smooth(f.base, SmootherSpec(cfg.family, eps));
      double dev = 0.0, min_rho = 1e300;
      for (const cplx& z : h.values) {
        dev = std::max(dev, std::abs(1.0 - std::abs(z)));
        min_rho = std::min(min_rho, std::abs(z));
      }
      if (dev < cfg.gate_sup && min_rho > cfg.rho_floor)
        CHECK(degree_winding(build_H(f, eps, cfg.family, cfg.rho_floor)).degree == 0);
    }
  }
}

TEST_CASE("half-case engine verifies the bound chain on a sine-phase map") {
  const int n = 4096;
  const UnimodularSamples f = winding_phase_map(n, 0, sine_phase(n, 0.5));
  const HalfCaseReport rep = verify_half_case(f);
  CHECK(rep.pass);
  int gated = 0;
  for (const StageReport& st : rep.stages) {
    if (!st.gate) continue;
    ++gated;
    for (const Check& c : st.checks)
      if (c.gating) CHECK(c.pass);
  }
  CHECK(gated >= 1);
}

TEST_CASE("half-case engine: constant maps give empty sums") {
  std::vector<cplx> ones(256, cplx(1.0, 0.0));
  const HalfCaseReport rep = verify_half_case(UnimodularSamples(CircleSamples(std::move(ones)), 1e-9));
  CHECK(rep.pass);
  CHECK(rep.c_half == doctest::Approx(0.0));
  CHECK(rep.two_sided_f == doctest::Approx(0.0));
}

TEST_CASE("half-case engine on the family map keeps a finite two-sided ratio") {
  const UnimodularSamples f = moebius_boundary(4096, 0.7, 2);
  const HalfCaseReport rep = verify_half_case(f);
  CHECK(rep.pass);
  CHECK(rep.two_sided_f / rep.c_half < 32.0);
}

TEST_CASE("half-case engine rejects maps of nonzero degree") {
  CHECK_THROWS_AS((void)verify_half_case(winding_phase_map(256, 1)), error);
}

TEST_CASE("argument reduction brings the lift under the threshold") {
  const int n = 1024;
  const UnimodularSamples f = winding_phase_map(n, 0, sine_phase(n, 0.3));
  const ReduceResult red = reduce_argument(f, 0.1);
  double sup = 0.0;
  const PhaseLift lift = phase_lift(red.reduced.base);
  for (double v : lift.values) sup = std::max(sup, std::abs(v));
  CHECK(sup < 0.1);
  CHECK(lift.winding == 0);
  // reconstruction f = g e^{i psi}
  for (int j = 0; j < n; ++j) {
    const cplx rebuilt = red.reduced.base.values[static_cast<std::size_t>(j)] *
                         std::polar(1.0, red.psi[static_cast<std::size_t>(j)]);
    CHECK(std::abs(rebuilt - f.base.values[static_cast<std::size_t>(j)]) < 1e-10);
  }
}

TEST_CASE("argument reduction reports exhaustion on discontinuous phases") {
  // a jump cannot be approximated in sup norm by band-limited phases
  CHECK_THROWS_WITH_AS((void)reduce_argument(two_arc_map(1024, pi / 2.0), 0.1),
                       doctest::Contains("maximum cutoff"), error);
}

TEST_CASE("vanishing samples cannot be lifted") {
  std::vector<cplx> v(8, cplx(1.0, 0.0));
  v[3] = 0.0;
  CHECK_THROWS_AS((void)phase_lift(CircleSamples(std::move(v))), error);
}

TEST_CASE("argument reduction is a no-op below the threshold") {
  const int n = 512;
  const UnimodularSamples f = winding_phase_map(n, 0, sine_phase(n, 0.05));
  const ReduceResult red = reduce_argument(f, 0.1);
  CHECK(red.cutoff == 0);
  for (double v : red.psi) CHECK(v == 0.0);
  for (int j = 0; j < n; ++j)
    CHECK(red.reduced.base.values[static_cast<std::size_t>(j)] ==
          f.base.values[static_cast<std::size_t>(j)]);
}

TEST_CASE("small-case engine: sine map passes with uniform norms") {
  const int n = 4096;
  const UnimodularSamples f = winding_phase_map(n, 0, sine_phase(n, 0.05));
  const SmallCaseReport rep = verify_small_case(f, 0.25);
  CHECK(rep.pass);
  double hs_min = std::numeric_limits<double>::infinity(), hs_max = 0.0;
  for (const SmallStageReport& st : rep.stages) {
    CHECK(st.gate);
    CHECK(st.q0 <= st.q1 * (1.0 + 1e-9));
    CHECK(st.q1 <= st.q2 * (1.0 + 1e-9));
    CHECK(st.q2 <= st.q3 * (1.0 + 1e-9));
    hs_min = std::min(hs_min, st.hs_two_sided);
    hs_max = std::max(hs_max, st.hs_two_sided);
  }
  // fully resolved content: uniform across the whole schedule within 5%
  CHECK(hs_max <= hs_min * 1.05);
}

TEST_CASE("small-case engine stabilizes on the fine stages of a wide-spectrum map") {
  const UnimodularSamples f = moebius_boundary(4096, 0.7, 2);
  const SmallCaseReport rep = verify_small_case(f, 0.25);
  CHECK(rep.pass);
}

TEST_CASE("small-case engine: the zero phase yields all-zero ledgers") {
  std::vector<cplx> ones(256, cplx(1.0, 0.0));
  const SmallCaseReport rep =
      verify_small_case(UnimodularSamples(CircleSamples(std::move(ones)), 1e-9), 0.25);
  CHECK(rep.pass);
  CHECK(rep.c_one_sided == doctest::Approx(0.0));
  for (const SmallStageReport& st : rep.stages) {
    CHECK(st.q0 == doctest::Approx(0.0));
    CHECK(st.lp_quadratic == doctest::Approx(0.0));
  }
}

TEST_CASE("phase-difference inequality holds over a dense sample") {
  SeededRng rng(59);
  for (int i = 0; i < 200000; ++i) {
    const double u = rng.uniform(-10.0, 10.0);
    const double v = rng.uniform(-10.0, 10.0);
    const double lhs = std::abs(u - v);
    const double rhs = std::abs(std::polar(1.0, u) - std::polar(1.0, v)) +
                       std::pow(std::abs(u - v), 1.5);
    CHECK(lhs <= rhs + 1e-12);
  }
}

TEST_CASE("oscillation entry: continuous maps delegate, jumps are screened out") {
  const int n = 4096;
  const UnimodularSamples f = winding_phase_map(n, 0, sine_phase(n, 0.5));
  const VmoReport rep = vmo_entry(f, 0.25);
  CHECK(rep.pass);
  CHECK(all_gating_pass(rep.screen));
  // modulus deviation shrinks along the schedule
  for (std::size_t i = 1; i < rep.rho_trend.size(); ++i)
    CHECK(rep.rho_trend[i] <= rep.rho_trend[i - 1] + 1e-12);

  CHECK_THROWS_AS((void)vmo_entry(two_arc_map(n, pi / 2.0), 0.25), error);
}
