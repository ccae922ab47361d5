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

// Randomized end-to-end checks. Every trial is reproducible from
// (master seed, trial index); suites give identical records for any thread count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "mzd/interferometer.hpp"
#include "mzd/which_path.hpp"

namespace mzd {

struct TrialConfig {
  std::uint64_t seed = 0;
  std::size_t trial_index = 0;
  std::size_t detector_dim = 2;
  InterferometerConfig config;
  Strategy strategy = Strategy::computational(2, {0});
};

/// Random particle state (Bloch ball, or sphere when `pure_states`), Wishart
/// detector state, Haar detector unitary, r in (0.01, 0.99), phi in [0, 2pi),
/// either port, and a random basis with a nonempty proper subset.
TrialConfig sample_config(std::uint64_t master_seed, std::size_t trial_index,
                          std::size_t detector_dim, bool pure_states = false);

struct TrialRecord {
  std::size_t trial = 0;
  std::size_t detector_dim = 0;
  Port port = Port::A;
  bool degenerate = false;

  double r = 0.0;
  double phi = 0.0;
  double w_plus = 0.0;
  double abs_rho01 = 0.0;
  double predictability = 0.0;
  double v0 = 0.0;
  double v = 0.0;
  double d_s = 0.0;
  double gamma_s = 0.0;
  /// 1 - P^2 - V0^2.
  double slack_prior = 0.0;
  /// sqrt(eta_S eta_S^U) + sqrt(eta_Sbar eta_Sbar^U) - V/V0.
  double slack_sqrt_eta = 0.0;
  /// 1 - gamma_S^2 - D_S^2 - (1 - P^2) V^2 / V0^2.
  double slack_duality = 0.0;
  /// 1 - D_S^2 - (1 - P^2) V^2 / V0^2.
  double slack_dv = 0.0;
  double jm_margin = 0.0;
  bool jm_oracle_agrees = true;
  double povm_deviation = 0.0;
};

TrialRecord evaluate_trial(const TrialConfig& trial, bool optimal_strategy = false,
                           std::size_t search_budget = 8);

/// Largest deviation between Bloch closed forms and partial-trace constructions
/// of both effects, and between the induced probabilities and direct joint-state ones.
double cross_validate_povms(const TrialConfig& trial);

struct SuiteOptions {
  std::uint64_t master_seed = 0;
  std::size_t n_trials = 1;
  /// Trial i uses detector dimension dim_min + i mod (dim_max - dim_min + 1).
  std::size_t dim_min = 2;
  std::size_t dim_max = 2;
  bool pure_states = false;
  bool optimal_strategy = false;
  std::size_t threads = 1;
  std::size_t search_budget = 8;
};

struct InequalityStats {
  double min_slack = std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  /// |slack| <= 1e-9.
  std::size_t saturated = 0;

  void add(double slack);
};

struct DualityReport {
  SuiteOptions options;
  std::vector<TrialRecord> trials;

  InequalityStats prior;
  InequalityStats sqrt_eta;
  InequalityStats duality;
  InequalityStats dv;
  std::size_t degenerate = 0;
  std::size_t jm_agreements = 0;
  std::size_t jm_disagreements = 0;
  /// Largest |margin| among disagreeing trials.
  double max_disagreement_margin = 0.0;
  double max_povm_deviation = 0.0;

  double agreement_rate() const;
  std::size_t total_violations() const;
};

/// Throws DomainError for n_trials == 0 or a detector range outside [2, 8].
DualityReport run_suite(const SuiteOptions& options);

/// Recomputes the aggregates from `trials`.
void aggregate(DualityReport& report);

}  // namespace mzd
