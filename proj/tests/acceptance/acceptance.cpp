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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mzd/cli.hpp"
#include "mzd/duality_harness.hpp"
#include "mzd/interferometer.hpp"
#include "mzd/sampling.hpp"
#include "mzd/unsharp_joint.hpp"
#include "mzd/which_path.hpp"
#include "oracles.hpp"

using namespace mzd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome prior_suite() {
  Outcome o;
  SuiteOptions opt;
  opt.master_seed = 1001;
  opt.n_trials = 10000;
  opt.dim_min = 2;
  opt.dim_max = 4;
  const DualityReport mixed = run_suite(opt);
  require(o, mixed.prior.violations == 0,
          std::to_string(mixed.prior.violations) + " prior violations");
  opt.pure_states = true;
  const DualityReport pure = run_suite(opt);
  double worst = 0.0;
  for (const auto& rec : pure.trials) worst = std::max(worst, std::abs(rec.slack_prior));
  require(o, worst <= 1e-9, "pure-state slack " + fmt("%.3g", worst));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("min slack ") +
              fmt("%.3g", mixed.prior.min_slack) + ", pure max |slack| " + fmt("%.3g", worst);
  return o;
}

Outcome duality_suite() {
  Outcome o;
  SuiteOptions opt;
  opt.master_seed = 2002;
  opt.n_trials = 10000;
  opt.dim_min = 2;
  opt.dim_max = 8;
  const DualityReport rep = run_suite(opt);
  require(o, rep.duality.violations == 0,
          std::to_string(rep.duality.violations) + " duality violations");
  require(o, rep.sqrt_eta.violations == 0,
          std::to_string(rep.sqrt_eta.violations) + " sqrt-eta violations");
  require(o, rep.degenerate == 0, std::to_string(rep.degenerate) + " degenerate trials");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("min slack ") +
              fmt("%.3g", rep.duality.min_slack) + ", sqrt-eta min slack " +
              fmt("%.3g", rep.sqrt_eta.min_slack);
  return o;
}

Outcome saturation_witness() {
  Outcome o;
  TrialConfig t;
  t.config.r = 0.5;
  t.config.particle_state = DensityOperator::pure(mzd::testing::ket({1.0, 1.0}));
  t.config.detector_state = DensityOperator::basis_state(2, 0);
  t.config.detector_unitary = qubit_rotation(BlochVector::UnitY(), std::numbers::pi / 2);
  t.strategy = Strategy::computational(2, {0});
  const TrialRecord rec = evaluate_trial(t);
  const auto near = [&](double got, double want, const char* name) {
    require(o, std::abs(got - want) <= 1e-9, std::string(name) + " = " + fmt("%.17g", got));
  };
  near(rec.d_s, 0.5, "D_S");
  near(rec.v, 1.0 / std::sqrt(2.0), "V");
  near(rec.gamma_s, 0.5, "gamma_S");
  near(rec.predictability, 0.0, "P");
  near(rec.v0, 1.0, "V0");
  near(rec.slack_duality, 0.0, "slack");
  if (o.pass) o.detail = "slack " + fmt("%.3g", rec.slack_duality);
  return o;
}

Outcome povm_equivalence() {
  Outcome o;
  Rng rng(4004);
  double worst = 0.0;
  double worst_dot_sym = 0.0;
  std::size_t asym = 0, asym_nonzero = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 2 + trial % 7;
    auto c = mzd::testing::random_config(rng, d);
    c.port = trial % 2 ? Port::A : Port::B;
    const Strategy s = mzd::testing::random_strategy(rng, d);
    worst = std::max(worst, max_abs_entry(interference_observable(c).effect_plus() -
                                          interference_effect_brute_force(c)));
    const UnsharpObservable g = guess_observable(s, c.detector_state, c.detector_unitary);
    worst = std::max(worst, max_abs_entry(g.effect_plus() - guess_effect_brute_force(c, s)));

    // Empty and full guess sets give m = 0; the generic claim concerns proper subsets.
    if (!s.subset().empty() && s.subset().size() < d) {
      const double dot = g.direction().dot(interference_observable(c).direction());
      ++asym;
      if (std::abs(dot) > 1e-12) ++asym_nonzero;
    }
    c.r = 0.5;
    worst_dot_sym = std::max(
        worst_dot_sym, std::abs(g.direction().dot(interference_observable(c).direction())));
  }
  require(o, worst <= 1e-10, "entrywise deviation " + fmt("%.3g", worst));
  require(o, worst_dot_sym <= 1e-12, "m.n at r = 1/2 " + fmt("%.3g", worst_dot_sym));
  require(o, asym_nonzero * 100 >= asym * 99,
          "m.n nonzero on only " + std::to_string(asym_nonzero) + " of " + std::to_string(asym));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max deviation ") + fmt("%.3g", worst) +
              ", m.n != 0 on " + std::to_string(asym_nonzero) + "/" + std::to_string(asym);
  return o;
}

Outcome jm_cross_validation() {
  Outcome o;
  Rng rng(5005);
  const std::size_t n = 10000;
  std::size_t agree = 0;
  double worst_margin = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = uniform(rng, -1.0, 1.0);
    const BlochVector m =
        random_direction(rng) * (1.0 - std::abs(x)) * std::cbrt(uniform(rng, 0.0, 1.0));
    const BlochVector nv = random_direction(rng) * std::cbrt(uniform(rng, 0.0, 1.0));
    const UnsharpObservable a(x, m);
    const UnsharpObservable b(0.0, nv);
    const auto closed = jm_closed_form(a, b);
    const auto oracle = jm_oracle(a, b);
    if (closed.jointly_measurable == oracle.jointly_measurable) {
      ++agree;
    } else {
      worst_margin = std::max(worst_margin, std::abs(closed.margin));
    }
  }
  const double rate = static_cast<double>(agree) / n;
  require(o, rate >= 0.999, "agreement " + fmt("%.5f", rate));
  require(o, worst_margin <= 1e-3, "disagreement margin " + fmt("%.3g", worst_margin));

  const double s = 1.0 / std::sqrt(2.0);
  const UnsharpObservable a(0.0, BlochVector(0, 0, s));
  const UnsharpObservable b(0.0, BlochVector(s, 0, 0));
  const auto edge = jm_closed_form(a, b);
  const auto witness = jm_oracle(a, b);
  require(o, std::abs(edge.margin) <= 1e-9, "boundary margin " + fmt("%.3g", edge.margin));
  require(o, witness.witness.has_value(), "no boundary witness");
  if (witness.witness) {
    require(o,
            witness.witness->min_eigenvalue() >= -1e-9 &&
                witness.witness->completeness_error() <= 1e-10 &&
                witness.witness->marginal_error(a, b) <= 1e-10,
            "boundary witness invalid");
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("agreement ") + fmt("%.5f", rate) +
              ", boundary margin " + fmt("%.3g", edge.margin);
  return o;
}

Outcome strategy_optimization() {
  Outcome o;
  Rng rng(6006);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const DensityOperator rho_d = random_density(d, rng);
    const UnitaryOperator u = haar_unitary(d, rng);
    const double w1 = uniform(rng, 0.0, 1.0);
    const auto opt = optimize_strategy(rho_d, u, w1, 1.0 - w1, 8, static_cast<std::uint64_t>(trial));
    worst = std::max(worst, std::abs(opt.distinguishability - helstrom_bound(rho_d, u, w1, 1.0 - w1)));
  }
  require(o, worst <= 1e-6, "max gap to bound " + fmt("%.3g", worst));

  const DensityOperator zero = DensityOperator::basis_state(2, 0);
  const double marked =
      optimize_strategy(zero, UnitaryOperator(pauli_x()), 0.5, 0.5, 8).distinguishability;
  require(o, std::abs(marked - 1.0) <= 1e-12, "orthogonal marking " + fmt("%.17g", marked));
  Rng rng2(6007);
  for (double w1 : {0.1, 0.35, 0.5, 0.8}) {
    const DensityOperator rho_d = random_density(3, rng2);
    const double same =
        optimize_strategy(rho_d, UnitaryOperator::identity(3), w1, 1.0 - w1, 8).distinguishability;
    require(o, std::abs(same - std::abs(2 * w1 - 1.0)) <= 1e-12,
            "identity unitary " + fmt("%.17g", same));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max gap ") + fmt("%.3g", worst);
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto run = [](const char* threads) {
    const char* argv[] = {"mzd",           "duality", "--trials",  "1000", "--seed", "42",
                          "--detector-dim", "2",      "--threads", threads};
    std::ostringstream out, err;
    const int code = cli::run(10, argv, out, err);
    return std::make_pair(code, out.str());
  };
  const auto first = run("1");
  const auto second = run("1");
  const auto wide = run("8");
  require(o, first.first == 0 && wide.first == 0, "nonzero exit");
  require(o, first.second == second.second, "repeat run differs");
  require(o, first.second == wide.second, "8-thread run differs");
  require(o, !first.second.empty(), "empty output");
  if (o.pass) o.detail = std::to_string(first.second.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"prior duality suite", 10.0, prior_suite},
      {"duality suite", 30.0, duality_suite},
      {"saturation witness", 0.0, saturation_witness},
      {"POVM closed-form equivalence", 0.0, povm_equivalence},
      {"joint-measurability cross-validation", 60.0, jm_cross_validation},
      {"strategy optimization", 0.0, strategy_optimization},
      {"determinism", 0.0, determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += "; runtime over " + fmt("%.0f", c.budget_s) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("%s [%zu] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
