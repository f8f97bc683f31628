#include <doctest.h>

#include "unicirc/blaschke.hpp"
#include "unicirc/degree.hpp"
#include "unicirc/maps.hpp"

using namespace unicirc;

namespace {

// argument-principle count for a rational inner function: zeros inside the
// disk minus poles inside; for a product of disk factors the poles sit at
// 1/conj(alpha), outside
int argument_principle_degree(const std::vector<cplx>& zeros) {
  int count = 0;
  for (const cplx& z : zeros)
    if (std::abs(z) < 1.0) ++count;
  return count;
}

}  // namespace

TEST_CASE("winding degree of elementary maps") {
  CHECK(degree_winding(winding_phase_map(256, 5)).degree == 5);
  std::vector<double> wob(1024);
  for (int j = 0; j < 1024; ++j) wob[static_cast<std::size_t>(j)] = 0.4 * std::sin(two_pi * j / 1024.0);
  CHECK(degree_winding(winding_phase_map(1024, 0, wob)).degree == 0);
}

TEST_CASE("winding degree of a disk factor matches the argument principle") {
  const std::vector<cplx> zeros{cplx(0.9, 0.0)};
  const UnimodularSamples f = blaschke_boundary(2048, zeros);
  CHECK(degree_winding(f).degree == argument_principle_degree(zeros));
}

TEST_CASE("winding rejects unresolved antipodal steps") {
  // z^{N/2} steps by exactly pi between consecutive samples
  CHECK_THROWS_AS((void)degree_winding(winding_phase_map(64, 32)), error);
}

TEST_CASE("spectral degree of pure powers is exact") {
  for (int k : {-4, -1, 0, 2, 7}) {
    const FourierCoeffs c = analyze(winding_phase_map(256, k).base, 127);
    const DegreeResult d = degree_brezis(c);
    CHECK(d.rounded == k);
    CHECK(d.residual < 1e-12);
  }
}

TEST_CASE("family maps have spectral degree zero") {
  const FourierCoeffs c = moebius_family({0.5, 3}, 256);
  const DegreeResult d = degree_brezis(c);
  CHECK(std::abs(d.spectral_sum) < 1e-8);
  CHECK(d.rounded == 0);
}

TEST_CASE("conjugated two-zero product has spectral degree -2") {
  const std::vector<cplx> zeros{cplx(0.5, 0.0), cplx(-0.3, 0.2)};
  const UnimodularSamples f = blaschke_boundary(1024, zeros);
  std::vector<cplx> conj_v(f.base.values.size());
  for (std::size_t j = 0; j < conj_v.size(); ++j) conj_v[j] = std::conj(f.base.values[j]);
  const UnimodularSamples fc(CircleSamples(std::move(conj_v)), 1e-9);
  const DegreeResult d = degree_brezis(analyze(fc.base, 511));
  CHECK(d.rounded == -2);
  // dense winding oracle
  const UnimodularSamples dense = blaschke_boundary(4096, zeros);
  std::vector<cplx> dense_conj(dense.base.values.size());
  for (std::size_t j = 0; j < dense_conj.size(); ++j) dense_conj[j] = std::conj(dense.base.values[j]);
  CHECK(degree_winding(UnimodularSamples(CircleSamples(std::move(dense_conj)), 1e-9)).degree == -2);
}

TEST_CASE("high-mode content near the band edge raises the tail warning") {
  FourierCoeffs c(64);
  c.at(63) = 1.0;
  CHECK(degree_brezis(c).tail_warning);
  FourierCoeffs low(64);
  low.at(1) = 1.0;
  CHECK_FALSE(degree_brezis(low).tail_warning);
}

TEST_CASE("two-sided sum doubles the analytic side at degree zero") {
  std::vector<double> phi(512);
  for (int j = 0; j < 512; ++j) phi[static_cast<std::size_t>(j)] = std::sin(two_pi * j / 512.0);
  const FourierCoeffs c = analyze(winding_phase_map(512, 0, phi).base, 255);
  const SymmetryReport rep = check_symmetry_identity(c);
  CHECK(rep.gap < 1e-8);

  FourierCoeffs constant(4);
  constant.at(0) = 1.0;
  const SymmetryReport triv = check_symmetry_identity(constant);
  CHECK(triv.two_sided == 0.0);
  CHECK(triv.doubled_analytic == 0.0);

  const SymmetryReport fam = check_symmetry_identity(moebius_family({0.3, 1}, 128));
  CHECK(fam.gap < 1e-8);

  // nonzero degree is rejected
  const FourierCoeffs z2 = analyze(winding_phase_map(64, 2).base, 31);
  CHECK_THROWS_AS((void)check_symmetry_identity(z2), error);
}

TEST_CASE("degree shift moves the spectral degree by d") {
  FourierCoeffs z3(8);
  z3.at(3) = 1.0;
  const ShiftResult shifted = normalize_degree(z3, 3);
  CHECK(std::abs(shifted.coeffs.coef(0) - 1.0) < 1e-15);
  CHECK(shifted.truncated_energy == 0.0);

  SeededRng rng(5);
  FourierCoeffs c(32);
  for (int n = -16; n <= 16; ++n) c.at(n) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const ShiftResult fwd = normalize_degree(c, 9);
  const ShiftResult back = normalize_degree(fwd.coeffs, -9);
  CHECK(fwd.truncated_energy == 0.0);
  for (int n = -32; n <= 32; ++n) CHECK(std::abs(back.coeffs.coef(n) - c.coef(n)) < 1e-15);

  const FourierCoeffs moebius = analyze(blaschke_boundary(512, std::vector<cplx>{cplx(0.6, 0.0)}).base, 255);
  CHECK(degree_brezis(moebius).rounded == 1);
  CHECK(degree_brezis(normalize_degree(moebius, 1).coeffs).rounded == 0);

  CHECK_THROWS_AS((void)normalize_degree(z3, 9), error);
}

TEST_CASE("winding is additive over products") {
  SeededRng rng(29);
  const int n = 2048;
  for (int trial = 0; trial < 50; ++trial) {
    const int d1 = rng.uniform_int(-3, 3);
    const int d2 = rng.uniform_int(-3, 3);
    const UnimodularSamples f = winding_phase_map(n, d1, random_trig_phase(rng, 6, 1.0, n));
    const UnimodularSamples g = winding_phase_map(n, d2, random_trig_phase(rng, 6, 1.0, n));
    std::vector<cplx> prod(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      prod[static_cast<std::size_t>(j)] =
          f.base.values[static_cast<std::size_t>(j)] * g.base.values[static_cast<std::size_t>(j)];
    const UnimodularSamples fg(CircleSamples(std::move(prod)), 1e-8);
    CHECK(degree_winding(fg).degree == d1 + d2);
  }
}

TEST_CASE("spectral degree is rotation invariant") {
  SeededRng rng(31);
  const UnimodularSamples f = winding_phase_map(512, 2, random_trig_phase(rng, 8, 1.0, 512));
  const FourierCoeffs c = analyze(f.base, 255);
  FourierCoeffs rotated(c.bandwidth);
  const cplx phase = std::polar(1.0, 0.73);
  for (int n = -c.bandwidth; n <= c.bandwidth; ++n) rotated.at(n) = phase * c.coef(n);
  CHECK(degree_brezis(rotated).spectral_sum ==
        doctest::Approx(degree_brezis(c).spectral_sum).epsilon(1e-12));
}

TEST_CASE("winding cross-validates the spectral degree on seeded maps") {
  SeededRng rng(37);
  const int n = 1024;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = rng.uniform_int(-5, 5);
    const UnimodularSamples f =
        winding_phase_map(n, d, random_trig_phase(rng, 10, rng.uniform(0.1, 2.0), n));
    const DegreeResult b = degree_brezis(analyze(f.base, n / 2 - 1));
    CHECK(b.rounded == degree_winding(f).degree);
    CHECK(b.residual < 1e-6);
  }
}
