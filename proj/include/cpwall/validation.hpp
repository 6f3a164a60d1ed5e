// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Self-validation suite: one check per acceptance criterion.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cpwall::validation {

enum class Level { quick, full };

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;  // worst case over the check's sample
  double expected = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

// Test-harness hook: the auxiliary F used by the special-function checks.
struct Hooks {
  std::function<double(double)> aux_F;
};

CheckResult check_perfect_conductor_short();
CheckResult check_perfect_conductor_long();
CheckResult check_trivial_medium();
CheckResult check_short_range_law();
CheckResult check_conductor_collapse();
CheckResult check_long_range_small_kappa();
CheckResult check_long_range_large_kappa();
CheckResult check_nonadditivity();
CheckResult check_dispersive_equivalence();
CheckResult check_special_functions(const Hooks& hooks = {});
CheckResult check_finite_part();
CheckResult check_london_factor();

// Quick runs every check except the dispersive equivalence; full adds it.
std::vector<CheckResult> run(Level level, const Hooks& hooks = {});

}  // namespace cpwall::validation
