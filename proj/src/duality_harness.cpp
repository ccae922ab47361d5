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

#include "mzd/duality_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "mzd/errors.hpp"
#include "mzd/sampling.hpp"
#include "mzd/tolerances.hpp"
#include "mzd/unsharp_joint.hpp"

namespace mzd {

namespace {

constexpr double kMinReflectivity = 0.01;
constexpr double kMaxReflectivity = 0.99;

void check_dim(std::size_t d) {
  if (d < 2 || d > tol::kMaxDetectorDim) {
    throw DomainError("detector dimension " + std::to_string(d) + " outside [2, " +
                      std::to_string(tol::kMaxDetectorDim) + "]");
  }
}

}  // namespace

TrialConfig sample_config(std::uint64_t master_seed, std::size_t trial_index,
                          std::size_t detector_dim, bool pure_states) {
  check_dim(detector_dim);
  TrialConfig trial;
  trial.seed = mix_seed(master_seed, trial_index);
  trial.trial_index = trial_index;
  trial.detector_dim = detector_dim;

  Rng rng(trial.seed);
  InterferometerConfig& c = trial.config;
  c.particle_state = random_qubit_state(rng, pure_states);
  c.detector_state = random_density(detector_dim, rng);
  c.detector_unitary = haar_unitary(detector_dim, rng);
  c.r = uniform(rng, kMinReflectivity, kMaxReflectivity);
  c.phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  c.port = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Port::A : Port::B;

  const UnitaryOperator basis = haar_unitary(detector_dim, rng);
  std::vector<std::size_t> subset;
  std::bernoulli_distribution coin(0.5);
  do {
    subset.clear();
    for (std::size_t k = 0; k < detector_dim; ++k) {
      if (coin(rng)) subset.push_back(k);
    }
  } while (subset.empty() || subset.size() == detector_dim);
  trial.strategy = Strategy(basis.matrix(), std::move(subset));
  return trial;
}

double cross_validate_povms(const TrialConfig& trial) {
  const InterferometerConfig& c = trial.config;
  const ComplexMatrix n_closed = interference_observable(c).effect_plus();
  const ComplexMatrix m_closed =
      guess_observable(trial.strategy, c.detector_state, c.detector_unitary).effect_plus();

  double worst = max_abs_entry(n_closed - interference_effect_brute_force(c));
  worst = std::max(worst, max_abs_entry(m_closed - guess_effect_brute_force(c, trial.strategy)));

  const ComplexMatrix& rho = c.particle_state.matrix();
  const double p_direct = detection_probability(c);
  worst = std::max(worst, std::abs(p_direct - (rho * n_closed).trace().real()));

  const ComplexMatrix joint = final_state(c).matrix();
  const ComplexMatrix guess_projector = tensor(identity(2), trial.strategy.projector());
  const double guess_direct = (guess_projector * joint).trace().real();
  worst = std::max(worst, std::abs(guess_direct - (rho * m_closed).trace().real()));
  return worst;
}

TrialRecord evaluate_trial(const TrialConfig& input, bool optimal_strategy,
                           std::size_t search_budget) {
  TrialRecord rec;
  rec.trial = input.trial_index;
  rec.detector_dim = input.detector_dim;
  const InterferometerConfig& c = input.config;
  rec.port = c.port;
  rec.r = c.r;
  rec.phi = c.phi;
  rec.w_plus = c.w_plus();
  rec.abs_rho01 = std::abs(c.coherence());

  PortWeights weights;
  try {
    weights = port_weights(c);
    rec.predictability = predictability(c);
    rec.v0 = a_priori_visibility(c);
  } catch (const DegeneratePortError&) {
    rec.degenerate = true;
    return rec;
  }
  const double ratio = c.visibility_ratio();
  rec.v = rec.v0 * ratio;

  TrialConfig trial = input;
  if (optimal_strategy) {
    trial.strategy = optimize_strategy(c.detector_state, c.detector_unitary, weights.first,
                                       weights.second, search_budget, input.seed)
                         .strategy;
  }

  const EtaPair etas = eta_values(trial.strategy, c.detector_state, c.detector_unitary);
  rec.d_s = distinguishability(weights.first, weights.second, etas);
  rec.gamma_s = gamma_term(weights.first, weights.second, etas);

  const double p2 = rec.predictability * rec.predictability;
  const double ratio2 =
      rec.v0 > tol::kVisibilityFloor ? (rec.v * rec.v) / (rec.v0 * rec.v0) : ratio * ratio;
  rec.slack_prior = 1.0 - p2 - rec.v0 * rec.v0;
  rec.slack_sqrt_eta = std::sqrt(etas.eta_s * etas.eta_s_u) +
                       std::sqrt(etas.eta_sbar() * etas.eta_sbar_u()) - ratio;
  rec.slack_dv = 1.0 - rec.d_s * rec.d_s - (1.0 - p2) * ratio2;
  rec.slack_duality = rec.slack_dv - rec.gamma_s * rec.gamma_s;

  const UnsharpObservable guess =
      guess_observable(trial.strategy, c.detector_state, c.detector_unitary);
  const UnsharpObservable fringe = interference_observable(c);
  const ClosedFormResult closed = jm_closed_form(guess, fringe);
  const OracleResult oracle = jm_oracle(guess, fringe);
  rec.jm_margin = closed.margin;
  rec.jm_oracle_agrees = closed.jointly_measurable == oracle.jointly_measurable;

  rec.povm_deviation = cross_validate_povms(trial);
  return rec;
}

void InequalityStats::add(double slack) {
  min_slack = std::min(min_slack, slack);
  if (slack < -tol::kViolation) ++violations;
  if (std::abs(slack) <= tol::kViolation) ++saturated;
}

double DualityReport::agreement_rate() const {
  const std::size_t total = jm_agreements + jm_disagreements;
  return total == 0 ? 1.0 : static_cast<double>(jm_agreements) / static_cast<double>(total);
}

std::size_t DualityReport::total_violations() const {
  return prior.violations + sqrt_eta.violations + duality.violations + dv.violations;
}

void aggregate(DualityReport& report) {
  report.prior = {};
  report.sqrt_eta = {};
  report.duality = {};
  report.dv = {};
  report.degenerate = 0;
  report.jm_agreements = 0;
  report.jm_disagreements = 0;
  report.max_disagreement_margin = 0.0;
  report.max_povm_deviation = 0.0;
  for (const TrialRecord& rec : report.trials) {
    if (rec.degenerate) {
      ++report.degenerate;
      continue;
    }
    report.prior.add(rec.slack_prior);
    report.sqrt_eta.add(rec.slack_sqrt_eta);
    report.duality.add(rec.slack_duality);
    report.dv.add(rec.slack_dv);
    if (rec.jm_oracle_agrees) {
      ++report.jm_agreements;
    } else {
      ++report.jm_disagreements;
      report.max_disagreement_margin =
          std::max(report.max_disagreement_margin, std::abs(rec.jm_margin));
    }
    report.max_povm_deviation = std::max(report.max_povm_deviation, rec.povm_deviation);
  }
}

DualityReport run_suite(const SuiteOptions& options) {
  if (options.n_trials == 0) throw DomainError("run_suite: n_trials must be at least 1");
  if (options.dim_min > options.dim_max) throw DomainError("run_suite: empty dimension range");
  check_dim(options.dim_min);
  check_dim(options.dim_max);

  DualityReport report;
  report.options = options;
  report.trials.resize(options.n_trials);

  const std::size_t span = options.dim_max - options.dim_min + 1;
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  const auto worker = [&] {
    try {
      for (std::size_t i = next++; i < options.n_trials; i = next++) {
        const TrialConfig trial = sample_config(options.master_seed, i,
                                                options.dim_min + i % span, options.pure_states);
        report.trials[i] = evaluate_trial(trial, options.optimal_strategy, options.search_budget);
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = options.n_trials;
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, options.n_trials);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  aggregate(report);
  return report;
}

}  // namespace mzd
