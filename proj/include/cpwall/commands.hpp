// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

// Subcommands of the cpwall tool. Each returns the process exit status:
// 0 success, 1 numerical failure, 2 configuration failure.

#pragma once

#include <iosfwd>
#include <optional>

#include "cpwall/config.hpp"
#include "cpwall/records.hpp"
#include "cpwall/validation.hpp"

namespace cpwall {

enum ExitStatus : int { kExitOk = 0, kExitNumerical = 1, kExitConfig = 2 };

// Potential at distance z with the configured model; throws cpwall::Error.
EvalRecord evaluate_point(const RunConfig& config, double z);

// One sweep row; failures leave the optional fields empty.
SweepRecord sweep_point(const RunConfig& config, double z, std::string* failure = nullptr);

int run_eval(const RunConfig& config, double z, std::ostream& out, std::ostream& err);
// threads = 0 uses the hardware concurrency.
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err,
              unsigned threads = 0);
int run_limits(double eps, Format format, std::ostream& out, std::ostream& err);
int run_nonadd(Format format, std::ostream& out, std::ostream& err);
int run_validate(validation::Level level, Format format, std::ostream& out,
                 const validation::Hooks& hooks = {});

}  // namespace cpwall
