#pragma once

#include <string>
#include <vector>

#include "unicirc/common.hpp"

namespace unicirc {

/// One verified relation. pass <=> margin >= -tolerance. Non-gating checks
/// carry fitted placeholder constants and report margins without deciding
/// the run verdict.
struct Check {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool gating = true;
};

/// lhs <= rhs within an absolute tolerance.
inline Check check_le(std::string id, double lhs, double rhs, double tol = 0.0, bool gating = true) {
  Check c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = rhs - lhs;
  c.tolerance = tol;
  c.gating = gating;
  c.pass = c.margin >= -tol;
  return c;
}

/// |value| <= bound.
inline Check check_abs_le(std::string id, double value, double bound, double tol = 0.0,
                          bool gating = true) {
  return check_le(std::move(id), std::abs(value), bound, tol, gating);
}

inline bool all_gating_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (c.gating && !c.pass) return false;
  return true;
}

inline void append_checks(std::vector<Check>& dest, const std::string& prefix,
                          const std::vector<Check>& src) {
  for (Check c : src) {
    c.id = prefix + c.id;
    dest.push_back(std::move(c));
  }
}

}  // namespace unicirc
