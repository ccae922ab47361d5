// Copyright 2026 The mzduality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mzd::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kUsage = 2,
  kDegeneratePort = 3,
  kUnsupportedRegime = 4,
};

enum class Format { Csv, Json };

struct PatternArgs {
  std::string scenario;
  std::size_t phi_steps = 0;
  Format format = Format::Csv;
};

struct SweepArgs {
  std::string scenario;
  std::size_t r_steps = 0;
  Format format = Format::Csv;
};

struct DualityArgs {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t detector_dim = 2;
  bool pure_states = false;
  bool optimal_strategy = false;
  std::size_t threads = 1;
  Format format = Format::Csv;
  /// Where the JSON summary goes in CSV mode; empty sends it to the error stream.
  std::string summary_path;
};

enum class JmMethod { Closed, Oracle, Both };

struct JmArgs {
  std::optional<double> x;
  std::optional<double> y;
  std::vector<double> m;
  std::vector<double> n;
  std::string from_scenario;
  std::vector<std::size_t> subset;
  std::string strategy_path;
  std::string observables_path;
  JmMethod method = JmMethod::Both;
};

int cmd_pattern(const PatternArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep_r(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_duality(const DualityArgs& args, std::ostream& out, std::ostream& err);
int cmd_jm(const JmArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches to a subcommand and honors --output.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mzd::cli
