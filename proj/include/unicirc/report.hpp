#pragma once

#include "unicirc/check.hpp"
#include "unicirc/io.hpp"

namespace unicirc {

/// Aggregated run record: environment, one row per verified relation, and
/// consistency-counted summary. Serialization is byte-deterministic for a
/// fixed configuration (the worker count is deliberately not recorded).
struct VerificationReport {
  int grid = 4096;
  int bandwidth = 2047;
  std::uint64_t seed = 1;
  std::vector<std::string> suites;
  std::vector<Check> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const {
    int n = 0;
    for (const Check& c : checks) n += c.pass ? 1 : 0;
    return n;
  }
  int gating_failures() const {
    int n = 0;
    for (const Check& c : checks) n += (c.gating && !c.pass) ? 1 : 0;
    return n;
  }
  bool pass() const { return gating_failures() == 0; }

  std::string to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("environment").begin_object();
    w.key("grid").value(grid);
    w.key("bandwidth").value(bandwidth);
    w.key("seed").value(seed);
    w.key("suites").begin_array();
    for (const std::string& s : suites) w.value(s);
    w.end_array();
    w.end_object();
    w.key("checks").begin_array();
    for (const Check& c : checks) {
      w.begin_object();
      w.key("id").value(c.id);
      w.key("lhs").value(c.lhs);
      w.key("rhs").value(c.rhs);
      w.key("margin").value(c.margin);
      w.key("tolerance").value(c.tolerance);
      w.key("pass").value(c.pass);
      w.key("gating").value(c.gating);
      w.end_object();
    }
    w.end_array();
    w.key("summary").begin_object();
    w.key("total").value(total());
    w.key("passed").value(passed());
    w.key("failed").value(total() - passed());
    w.key("gating_failures").value(gating_failures());
    w.key("pass").value(pass());
    w.end_object();
    w.end_object();
    return w.str() + "\n";
  }
};

}  // namespace unicirc
