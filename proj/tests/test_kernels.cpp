#include <doctest.h>

#include "unicirc/kernels.hpp"
#include "unicirc/maps.hpp"

using namespace unicirc;

namespace {

std::vector<double> symmetric_grid(int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    grid[static_cast<std::size_t>(i)] = -pi + two_pi * (i + 1) / static_cast<double>(points);
  return grid;
}

}  // namespace

TEST_CASE("bump profile: power law outside, blend inside, zero at the edge") {
  const KernelSpec spec(8, 0.75);
  CHECK(gs_eval(spec, 1.5) == doctest::Approx(std::pow(0.5, 1.5)));
  CHECK(gs_eval(spec, -1.5) == doctest::Approx(std::pow(0.5, 1.5)));
  CHECK(gs_eval(spec, 2.0) == doctest::Approx(0.0));
  CHECK(gs_eval(spec, 2.5) == 0.0);
  CHECK(gs_eval(spec, 0.3) == gs_eval(spec, -0.3));
  for (double x = -2.0; x <= 2.0; x += 0.01) CHECK(gs_eval(spec, x) >= 0.0);
}

TEST_CASE("bump junction is twice differentiable at |x| = 1") {
  const KernelSpec spec(8, 0.65);
  const double h = 1e-3;
  // second-order one-sided second-derivative stencils meeting at the junction
  const auto d2_sided = [&](double x0, double dir) {
    return (2.0 * gs_eval(spec, x0) - 5.0 * gs_eval(spec, x0 + dir * h) +
            4.0 * gs_eval(spec, x0 + 2.0 * dir * h) - gs_eval(spec, x0 + 3.0 * dir * h)) /
           (h * h);
  };
  CHECK(std::abs(d2_sided(1.0, -1.0) - d2_sided(1.0, +1.0)) < 1e-4);
  // value and first derivative agree to higher order
  CHECK(std::abs(gs_eval(spec, 1.0 - 1e-9) - gs_eval(spec, 1.0 + 1e-9)) < 1e-8);
  // flat at the origin
  CHECK(std::abs(gs_eval(spec, h) - gs_eval(spec, 0.0)) < 1e-5);
}

TEST_CASE("kernel table: value at zero matches the area, imaginary residue is tiny") {
  for (double s : {0.25, 0.75}) {
    const KernelSpec spec(64, s);
    const std::vector<double> at_zero{1e-300};
    const KnsTable center = kns_table(spec, at_zero);
    CHECK(std::abs(center.value[0] / (64.0 * gs_integral(spec)) - 1.0) < 0.05);
    const KnsTable table = kns_table(spec, symmetric_grid(512));
    CHECK(table.max_imag < 1e-10);
    CHECK(table.fitted_c > 0.0);
  }
}

TEST_CASE("fitted decay constant is stable under frequency doubling") {
  const std::vector<double> grid = symmetric_grid(2048);
  for (double s : {0.25, 0.5, 0.75}) {
    double prev = -1.0, first = -1.0, last = -1.0;
    for (int n_scale : {64, 128, 256}) {
      const double c = kns_table(KernelSpec(n_scale, s), grid).fitted_c;
      if (prev > 0.0) CHECK(std::abs(c / prev - 1.0) <= 0.15);
      if (first < 0.0) first = c;
      prev = last = c;
    }
    CHECK(std::abs(last / first - 1.0) <= 0.15);  // endpoints of the sweep
  }
}

TEST_CASE("shifted weight: power identity on [0, N], support [0, 4N]") {
  const KernelSpec spec(8, 0.5);
  CHECK(delta_ns(spec, 4) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(delta_ns(spec, -1) == 0.0);
  CHECK(delta_ns(spec, 32) == doctest::Approx(0.0));
  CHECK(delta_ns(spec, 33) == 0.0);
  for (long n = -64; n <= 64; ++n) {
    const double d = delta_ns(spec, n);
    CHECK(d >= 0.0);
    if (n >= 0 && n <= 8)
      CHECK(d == doctest::Approx(std::pow(static_cast<double>(n), 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("weighted sums: symmetry kills J, deltas are exact") {
  const KernelSpec spec(4, 0.5);
  FourierCoeffs sym(20);
  sym.at(3) = cplx(0.4, 0.1);
  sym.at(-3) = cplx(-0.1, std::sqrt(0.16));  // same modulus
  sym.at(7) = 0.5;
  sym.at(-7) = cplx(0.0, 0.5);
  const IJPair p = ij_sums(sym, spec);
  CHECK(std::abs(p.antisymmetric) < 1e-10);
  CHECK(p.symmetric >= std::abs(p.antisymmetric));

  FourierCoeffs d1(16);
  d1.at(1) = 1.0;
  const IJPair q = ij_sums(d1, KernelSpec(2, 0.5));
  CHECK(q.symmetric == doctest::Approx(1.0));
  CHECK(q.antisymmetric == doctest::Approx(1.0));

  CHECK_THROWS_AS((void)ij_sums(d1, KernelSpec(16, 0.5)), error);  // band too narrow
}

TEST_CASE("capped spectral sum is dominated by the symmetric weighted sum") {
  SeededRng rng(77);
  FourierCoeffs c(128);
  for (int n = -128; n <= 128; ++n)
    c.at(n) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)) / (1.0 + std::abs(n));
  for (double s : {0.25, 0.75}) {
    const KernelSpec spec(32, s);
    const IJPair p = ij_sums(c, spec);
    double capped = 0.0;
    for (int n = -32; n <= 32; ++n)
      capped += std::pow(std::abs(static_cast<double>(n)), 2.0 * s) * std::norm(c.coef(n));
    CHECK(capped <= p.symmetric + 1e-12);
    CHECK(p.symmetric >= std::abs(p.antisymmetric) - 1e-12);
  }
}

TEST_CASE("hypothesis transfer on capped spectra") {
  // maps with spectrum inside [0, N]: the shifted weight agrees with n^{2s}
  // exactly, so the weighted sum reproduces the one-sided sum
  SeededRng rng(78);
  const KernelSpec spec(16, 0.25);
  FourierCoeffs c(64);
  for (int n = 0; n <= 16; ++n) c.at(n) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  double weighted = 0.0;
  for (int n = -64; n <= 64; ++n) weighted += delta_ns(spec, n) * std::norm(c.coef(n));
  const double one_sided = sobolev_spectral(c, {0.25, Side::one_sided, std::nullopt});
  CHECK(weighted == doctest::Approx(one_sided).epsilon(1e-12));
}

TEST_CASE("antisymmetric sum: two routes agree, zero-mean identity, cubic majorant") {
  const int n = 2048;
  SeededRng rng(505);
  const std::vector<double> phi = random_trig_phase(rng, 6, 0.4, n);
  const PhaseLift lift = phase_lift(winding_phase_map(n, 0, phi).base);
  double prev_ratio = -1.0;
  for (int n_scale : {16, 32, 64}) {
    const JnReport rep = jn_bound_check(lift, KernelSpec(n_scale, 0.75));
    CHECK(rep.mean_residual < 1e-8);
    CHECK(rep.spectral_gap < 1e-8);
    CHECK(std::abs(rep.j_integral) <= rep.majorant);  // fitted constant <= 1 here
    if (prev_ratio >= 0.0 && prev_ratio > 1e-12)
      CHECK(std::abs(rep.ratio / prev_ratio - 1.0) <= 0.25);
    prev_ratio = rep.ratio;
  }
}

TEST_CASE("symmetric weighted sum agrees with its double-integral route") {
  // test-only oracle: I = 2 iint cos(phi1-phi2) N^{2s} cos(2N(t1-t2)) K(t1-t2)
  const int n = 2048;
  SeededRng rng(707);
  const std::vector<double> phi = random_trig_phase(rng, 6, 0.4, n);
  const UnimodularSamples f = winding_phase_map(n, 0, phi);
  const KernelSpec spec(16, 0.75);
  std::vector<double> offsets(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) offsets[static_cast<std::size_t>(d)] = two_pi * d / n;
  const KnsTable kt = kns_table(spec, offsets);
  const std::vector<cplx> acf = autocorrelation(f.base.values);
  const double n2s = std::pow(16.0, 1.5);
  double i_integral = 0.0;
  for (int d = 0; d < n; ++d)
    i_integral += 2.0 * n2s * std::cos(32.0 * offsets[static_cast<std::size_t>(d)]) *
                  kt.value[static_cast<std::size_t>(d)] * acf[static_cast<std::size_t>(d)].real();
  i_integral /= static_cast<double>(n) * static_cast<double>(n);
  const IJPair p = ij_sums(analyze(f.base, n / 2 - 1), spec);
  CHECK(i_integral == doctest::Approx(p.symmetric).epsilon(1e-8));
}

TEST_CASE("symmetric-coefficient phases give vanishing J along the whole sweep") {
  const int n = 1024;
  std::vector<double> phi(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) phi[static_cast<std::size_t>(j)] = 0.3 * std::sin(two_pi * j / n);
  const PhaseLift lift = phase_lift(winding_phase_map(n, 0, phi).base);
  const JnReport rep = jn_bound_check(lift, KernelSpec(16, 0.75));
  CHECK(std::abs(rep.j_integral) < 1e-10);
  CHECK(std::abs(rep.j_spectral) < 1e-10);
  CHECK(std::abs(rep.j_integral) <= rep.majorant);
}

TEST_CASE("constant phases produce empty sums") {
  std::vector<double> phi(256, 0.7);
  const PhaseLift lift = phase_lift(winding_phase_map(256, 0, phi).base);
  const JnReport rep = jn_bound_check(lift, KernelSpec(8, 0.5));
  CHECK(rep.j_integral == doctest::Approx(0.0));
  CHECK(rep.majorant == doctest::Approx(0.0));
  CHECK(rep.ratio == 0.0);
}

TEST_CASE("cubic replacement never underestimates on sampled pairs") {
  SeededRng rng(606);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform(-10.0, 10.0);
    const double v = rng.uniform(-10.0, 10.0);
    const double x = u - v;
    CHECK(std::abs(std::sin(x) - x) <= std::abs(x * x * x));
  }
}

TEST_CASE("kernel spec validates its inputs") {
  CHECK_THROWS_AS(KernelSpec(0, 0.5), error);
  CHECK_THROWS_AS(KernelSpec(8, 0.0), error);
  CHECK_THROWS_AS(KernelSpec(8, 1.0), error);
}

TEST_CASE("antisymmetric checks need a grid resolving the weight support") {
  std::vector<double> phi(256, 0.0);
  const PhaseLift lift = phase_lift(winding_phase_map(256, 0, phi).base);
  CHECK_THROWS_AS((void)jn_bound_check(lift, KernelSpec(64, 0.5)), error);
}
