// Command-line front end: degree evaluation, seminorms, kernel tables, the
// verification engine, counterexample sweeps, divergence witnesses, and the
// batched suites. All outputs are byte-deterministic for a fixed seed.

#include <iostream>

#include <CLI11.hpp>

#include "unicirc/unicirc.hpp"

namespace {

using namespace unicirc;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text(out_path, text);
}

std::string degree_json(const DegreeResult& d) {
  JsonWriter w;
  w.begin_object();
  w.key("spectral_sum").value(d.spectral_sum);
  w.key("rounded").value(d.rounded);
  if (d.winding)
    w.key("winding").value(*d.winding);
  w.key("residual").value(d.residual);
  w.key("tail_energy").value(d.tail_energy);
  w.key("tail_warning").value(d.tail_warning);
  w.end_object();
  return w.str() + "\n";
}

int run_degree(const std::string& in, const std::string& method, int grid,
               const std::string& out) {
  const FourierCoeffs coeffs = read_coeffs(in);
  DegreeResult d;
  if (method == "brezis" || method == "both") d = degree_brezis(coeffs);
  if (method == "winding" || method == "both") {
    const int n = std::max(grid, static_cast<int>(next_pow2(2 * static_cast<std::size_t>(coeffs.bandwidth) + 2)));
    const UnimodularSamples f(synthesize(coeffs, n), 1e-3);
    const WindingResult w = degree_winding(f);
    d.winding = w.degree;
    if (method == "winding") {
      d.rounded = w.degree;
      d.spectral_sum = w.degree;
      d.residual = 0.0;
    }
  }
  emit(degree_json(d), out);
  return 0;
}

int run_norm(const std::string& in, double s, const std::string& side, const std::string& form,
             int ncut, int grid, const std::string& out) {
  const FourierCoeffs coeffs = read_coeffs(in);
  double value = 0.0;
  if (form == "spectral") {
    SobolevParams p{s, side == "one" ? Side::one_sided : Side::two_sided,
                    ncut > 0 ? std::optional<int>(ncut) : std::nullopt};
    value = sobolev_spectral(coeffs, p);
  } else {
    require(ncut > 0, "norm: the integral form needs --ncut (the frequency scale)");
    const int n = std::max(grid, static_cast<int>(next_pow2(2 * static_cast<std::size_t>(coeffs.bandwidth) + 2)));
    value = sobolev_integral(synthesize(coeffs, n), s, ncut);
  }
  JsonWriter w;
  w.begin_object();
  w.key("value").value(value);
  w.key("form").value(form);
  w.key("params").begin_object();
  w.key("s").value(s);
  w.key("side").value(side);
  if (ncut > 0) w.key("ncut").value(ncut);
  w.end_object();
  w.end_object();
  emit(w.str() + "\n", out);
  return 0;
}

int run_kernel(int n_scale, double s, int grid_points, const std::string& out) {
  const KernelSpec spec(n_scale, s);
  std::vector<double> grid(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i)
    grid[static_cast<std::size_t>(i)] =
        -pi + two_pi * static_cast<double>(i + 1) / static_cast<double>(grid_points);
  const KnsTable table = kns_table(spec, grid);
  std::string csv = "t,K,majorant,ratio\n";
  for (std::size_t i = 0; i < grid.size(); ++i)
    csv += format_double(table.t[i]) + "," + format_double(table.value[i]) + "," +
           format_double(table.majorant[i]) + "," + format_double(table.ratio[i]) + "\n";
  csv += "# fitted_c," + format_double(table.fitted_c) + "\n";
  emit(csv, out);
  return 0;
}

int run_verify(const std::string& in, const std::string& which, double s, int grid,
               const std::string& report_path) {
  const FourierCoeffs coeffs = read_coeffs(in);
  const int n = std::max(grid, static_cast<int>(next_pow2(2 * static_cast<std::size_t>(coeffs.bandwidth) + 2)));
  const UnimodularSamples f(synthesize(coeffs, n), 1e-6);
  PipelineConfig cfg;

  VerificationReport rep;
  rep.grid = n;
  rep.bandwidth = n / 2 - 1;
  rep.suites = {which};
  if (which == "half") {
    append_checks(rep.checks, "half.", verify_half_case(f, cfg).all_checks());
  } else if (which == "small") {
    append_checks(rep.checks, "small.", verify_small_case(f, s, cfg).all_checks());
  } else if (which == "vmo") {
    const VmoReport vr = vmo_entry(f, s, cfg);
    append_checks(rep.checks, "vmo.screen.", vr.screen);
    append_checks(rep.checks, "vmo.", vr.small.all_checks());
  } else {
    fail("verify: unknown case '" + which + "' (use half|small|vmo)");
  }
  emit(rep.to_json(), report_path);
  return rep.pass() ? 0 : 1;
}

int run_counterexample(double s, const std::string& sweep, const std::string& out) {
  std::vector<double> a_grid;
  std::vector<int> k_grid;
  bool conjugate = false;
  if (sweep == "a") {
    a_grid = sweep_a_grid();
    k_grid = {2, 8, 32};
    conjugate = s > 0.5;
    if (conjugate) k_grid = {1, 2, 4};
  } else if (sweep == "k") {
    a_grid = {0.5, 0.9, 0.95};
    k_grid = {2, 4, 8, 16, 32, 64};
  } else {
    fail("counterexample: unknown sweep '" + sweep + "' (use a|k)");
  }
  const SweepTable table = scaling_sweep(s, a_grid, k_grid, conjugate);
  std::string csv = "a,k,one_sided,two_sided,slope_gap,slope_k,slope_invgap\n";
  const std::string sg = table.slope_gap ? format_double(table.slope_gap->slope) : "";
  const std::string sk = table.slope_k ? format_double(table.slope_k->slope) : "";
  const std::string si = table.slope_invgap ? format_double(table.slope_invgap->slope) : "";
  for (const SweepRow& r : table.rows)
    csv += format_double(r.a) + "," + std::to_string(r.k) + "," + format_double(r.one_sided) +
           "," + format_double(r.two_sided) + "," + sg + "," + sk + "," + si + "\n";
  emit(csv, out);
  return 0;
}

int run_blaschke_r1(const std::string& weight, int stages, double growth, const std::string& out) {
  const R1Options opt;
  const int len = (opt.base_bandwidth << (stages - 1)) + 1;
  WeightSeq w = WeightSeq::constant(1.0, len);
  if (weight == "log")
    w = WeightSeq::log_weight(len);
  else if (weight == "linear")
    w = WeightSeq::power_weight(1.0, len);
  else if (weight != "one")
    fail("blaschke r1: unknown weight '" + weight + "' (use log|linear|one)");

  const R1Result res = r1_construct(w, stages, growth, opt);
  JsonWriter jw;
  jw.begin_object();
  jw.key("weight").value(weight);
  jw.key("growth").value(growth);
  jw.key("complete").value(res.complete);
  if (!res.diagnostic.empty()) jw.key("diagnostic").value(res.diagnostic);
  jw.key("stages").begin_array();
  for (const BlaschkeStage& st : res.stages) {
    jw.begin_object();
    jw.key("nu").value(st.nu);
    jw.key("zeros").begin_array();
    for (const cplx& z : st.zeros) {
      jw.begin_object();
      jw.key("re").value(z.real());
      jw.key("im").value(z.imag());
      jw.end_object();
    }
    jw.end_array();
    jw.end_object();
  }
  jw.end_array();
  jw.key("norm_trace").begin_array();
  for (double t : res.trace) jw.value(t);
  jw.end_array();
  jw.end_object();
  emit(jw.str() + "\n", out);
  return res.complete ? 0 : 1;
}

int run_suites(const std::vector<std::string>& names, std::uint64_t seed, int grid,
               int bandwidth, const std::string& out) {
  SuiteConfig cfg;
  if (!names.empty()) cfg.suites = names;
  cfg.seed = seed;
  cfg.grid = grid;
  cfg.bandwidth = bandwidth;
  const VerificationReport rep = run_suite(cfg);
  emit(rep.to_json(), out);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for Fourier analysis of unimodular circle maps"};
  app.require_subcommand(1);
  app.fallthrough();

  int grid = 4096;
  int bandwidth = 0;
  std::uint64_t seed = 1;
  std::string out;
  app.add_option("--grid", grid, "sample grid size (power of two)");
  app.add_option("--bandwidth", bandwidth, "coefficient bandwidth (default grid/2 - 1)");
  app.add_option("--seed", seed, "seed for randomized batteries");
  app.add_option("--out", out, "output file (default stdout)");

  auto* c_degree = app.add_subcommand("degree", "topological degree of a coefficient file");
  std::string in_path, method = "both";
  c_degree->add_option("--in", in_path, "coefficient CSV/JSON")->required();
  c_degree->add_option("--method", method, "winding|brezis|both")
      ->check(CLI::IsMember({"winding", "brezis", "both"}));

  auto* c_norm = app.add_subcommand("norm", "smoothness seminorms");
  double s = 0.5;
  std::string side = "two", form = "spectral";
  int ncut = 0;
  c_norm->add_option("--in", in_path, "coefficient CSV/JSON")->required();
  c_norm->add_option("--s", s, "smoothness exponent");
  c_norm->add_option("--side", side, "one|two")->check(CLI::IsMember({"one", "two"}));
  c_norm->add_option("--form", form, "spectral|integral")
      ->check(CLI::IsMember({"spectral", "integral"}));
  c_norm->add_option("--ncut", ncut, "frequency cap / integral scale");

  auto* c_kernel = app.add_subcommand("kernel", "tabulate the scaled kernel and its decay");
  int n_scale = 64, grid_points = 2048;
  c_kernel->add_option("--N", n_scale, "frequency scale");
  c_kernel->add_option("--s", s, "smoothness exponent");
  c_kernel->add_option("--grid", grid_points, "number of tabulated points");

  auto* c_verify = app.add_subcommand("verify", "run the verification engine on a map");
  std::string which = "half", report_path;
  c_verify->add_option("--case", which, "half|small|vmo")
      ->check(CLI::IsMember({"half", "small", "vmo"}));
  c_verify->add_option("--in", in_path, "coefficient CSV/JSON")->required();
  c_verify->add_option("--s", s, "smoothness exponent (small/vmo cases)");
  c_verify->add_option("--report", report_path, "report JSON path");

  auto* c_counter = app.add_subcommand("counterexample", "scaling sweeps of the family maps");
  std::string sweep = "a";
  c_counter->add_option("--s", s, "smoothness exponent");
  c_counter->add_option("--sweep", sweep, "a|k")->check(CLI::IsMember({"a", "k"}));

  auto* c_blaschke = app.add_subcommand("blaschke", "dilated product constructions");
  auto* c_r1 = c_blaschke->add_subcommand("r1", "greedy divergence witness");
  std::string weight = "log";
  int stages = 5;
  double growth = 2.0;
  c_r1->add_option("--weight", weight, "log|linear|one");
  c_r1->add_option("--stages", stages, "number of stages");
  c_r1->add_option("--growth", growth, "per-stage norm growth factor");

  auto* c_suite = app.add_subcommand("suite", "run the batched verification suites");
  std::vector<std::string> suite_names;
  c_suite->add_option("--suites", suite_names, "subset of degree,half,small,vmo,kernel,sweep,r1,theorem3")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
    if (*c_degree) return run_degree(in_path, method, grid, out);
    if (*c_norm) return run_norm(in_path, s, side, form, ncut, grid, out);
    if (*c_kernel) return run_kernel(n_scale, s, grid_points, out);
    if (*c_verify) return run_verify(in_path, which, s, grid, report_path);
    if (*c_counter) return run_counterexample(s, sweep, out);
    if (*c_blaschke) return run_blaschke_r1(weight, stages, growth, out);
    if (*c_suite) return run_suites(suite_names, seed, grid, bandwidth, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const unicirc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
