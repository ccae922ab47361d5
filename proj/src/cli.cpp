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

#include "mzd/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "mzd/duality_harness.hpp"
#include "mzd/errors.hpp"
#include "mzd/interferometer.hpp"
#include "mzd/io.hpp"
#include "mzd/unsharp_joint.hpp"
#include "mzd/which_path.hpp"

namespace mzd::cli {

namespace {

using io::format_double;
using io::json;

constexpr double kSweepMin = 0.01;
constexpr double kSweepMax = 0.99;

json witness_json(const JointObservable& joint) {
  return json::array({io::matrix_to_json(joint.plus_plus()), io::matrix_to_json(joint.plus_minus()),
                      io::matrix_to_json(joint.minus_plus()),
                      io::matrix_to_json(joint.minus_minus())});
}

}  // namespace

int cmd_pattern(const PatternArgs& args, std::ostream& out, std::ostream& err) {
  if (args.phi_steps < 2) {
    err << "pattern: --phi-steps must be at least 2\n";
    return kUsage;
  }
  try {
    const InterferometerConfig config = io::parse_scenario(io::load_json(args.scenario));
    const double v0 = a_priori_visibility(config);
    const double v = fringe_visibility(config);
    const double p = predictability(config);

    std::vector<double> phis, pa, pb;
    for (std::size_t k = 0; k < args.phi_steps; ++k) {
      InterferometerConfig at = config;
      at.phi = 2.0 * std::numbers::pi * static_cast<double>(k) /
               static_cast<double>(args.phi_steps);
      at.port = Port::A;
      const double p_a = detection_probability(at);
      at.port = Port::B;
      const double p_b = detection_probability(at);
      phis.push_back(at.phi);
      pa.push_back(p_a);
      pb.push_back(p_b);
    }

    const json summary{{"port", port_name(config.port)}, {"V0", v0}, {"V", v}, {"P", p}};
    if (args.format == Format::Json) {
      json doc = summary;
      doc["phi"] = phis;
      doc["p_A"] = pa;
      doc["p_B"] = pb;
      out << doc.dump(2) << '\n';
    } else {
      out << "phi,p_A,p_B\n";
      for (std::size_t k = 0; k < phis.size(); ++k) {
        out << format_double(phis[k]) << ',' << format_double(pa[k]) << ','
            << format_double(pb[k]) << '\n';
      }
      out << "# " << summary.dump() << '\n';
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "pattern: " << e.what() << '\n';
    return kUsage;
  } catch (const DegeneratePortError& e) {
    err << "pattern: " << e.what() << '\n';
    return kDegeneratePort;
  } catch (const Error& e) {
    err << "pattern: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_sweep_r(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (args.r_steps < 2) {
    err << "sweep-r: --r-steps must be at least 2\n";
    return kUsage;
  }
  try {
    const InterferometerConfig config = io::parse_scenario(io::load_json(args.scenario));
    const bool port_a = config.port == Port::A;
    std::vector<std::array<double, 6>> rows;
    for (std::size_t k = 0; k < args.r_steps; ++k) {
      InterferometerConfig at = config;
      at.r = kSweepMin + (kSweepMax - kSweepMin) * static_cast<double>(k) /
                             static_cast<double>(args.r_steps - 1);
      const PathWeights w = path_weights(at);
      rows.push_back({at.r, port_a ? w.w1 : w.w3, port_a ? w.w2 : w.w4, predictability(at),
                      a_priori_visibility(at), fringe_visibility(at)});
    }

    const char* first = port_a ? "w1" : "w3";
    const char* second = port_a ? "w2" : "w4";
    if (args.format == Format::Json) {
      json doc = json::array();
      for (const auto& row : rows) {
        doc.push_back({{"r", row[0]}, {first, row[1]}, {second, row[2]}, {"P", row[3]},
                       {"V0", row[4]}, {"V", row[5]}});
      }
      out << doc.dump(2) << '\n';
    } else {
      out << "r," << first << ',' << second << ",P,V0,V\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? "," : "") << format_double(row[i]);
        }
        out << '\n';
      }
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "sweep-r: " << e.what() << '\n';
    return kUsage;
  } catch (const DegeneratePortError& e) {
    err << "sweep-r: " << e.what() << '\n';
    return kDegeneratePort;
  } catch (const Error& e) {
    err << "sweep-r: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_duality(const DualityArgs& args, std::ostream& out, std::ostream& err) {
  if (args.trials == 0) {
    err << "duality: --trials must be at least 1\n";
    return kUsage;
  }
  SuiteOptions options;
  options.master_seed = args.seed;
  options.n_trials = args.trials;
  options.dim_min = args.detector_dim;
  options.dim_max = args.detector_dim;
  options.pure_states = args.pure_states;
  options.optimal_strategy = args.optimal_strategy;
  options.threads = args.threads == 0 ? 1 : args.threads;

  DualityReport report;
  try {
    report = run_suite(options);
  } catch (const DomainError& e) {
    err << "duality: " << e.what() << '\n';
    return kUsage;
  }

  const json summary = io::report_summary(report);
  if (args.format == Format::Json) {
    out << summary.dump(2) << '\n';
  } else {
    io::write_report_csv(report, out);
    if (args.summary_path.empty()) {
      err << summary.dump(2) << '\n';
    } else {
      std::ofstream file(args.summary_path);
      if (!file) {
        err << "duality: cannot write " << args.summary_path << '\n';
        return kUsage;
      }
      file << summary.dump(2) << '\n';
    }
  }
  return report.total_violations() == 0 ? kOk : kViolations;
}

int cmd_jm(const JmArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<UnsharpObservable> first;
  std::optional<UnsharpObservable> second;
  try {
    if (!args.from_scenario.empty()) {
      const InterferometerConfig config = io::parse_scenario(io::load_json(args.from_scenario));
      std::optional<Strategy> strategy;
      if (!args.strategy_path.empty()) {
        strategy = io::parse_strategy(io::load_json(args.strategy_path));
      } else if (!args.subset.empty()) {
        try {
          strategy = Strategy::computational(config.detector_dim(), args.subset);
        } catch (const ContractViolation& e) {
          throw ParseError(e.what());
        }
      } else {
        throw ParseError("--from-scenario needs --subset or --strategy");
      }
      first = guess_observable(*strategy, config.detector_state, config.detector_unitary);
      second = interference_observable(config);
    } else if (!args.observables_path.empty()) {
      const json doc = io::load_json(args.observables_path);
      if (!doc.is_array() || doc.size() != 2) {
        throw ParseError("observables file must hold an array of two observables");
      }
      first = io::parse_observable(doc[0]);
      second = io::parse_observable(doc[1]);
    } else {
      if (!args.x || args.m.size() != 3 || args.n.size() != 3) {
        throw ParseError("jm needs --x R --m X,Y,Z --n X,Y,Z (or --from-scenario)");
      }
      first = UnsharpObservable(*args.x, BlochVector(args.m[0], args.m[1], args.m[2]));
      second = UnsharpObservable(args.y.value_or(0.0), BlochVector(args.n[0], args.n[1], args.n[2]));
    }
  } catch (const InvalidObservableError& e) {
    err << "jm: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "jm: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "jm: " << e.what() << '\n';
    return kUsage;
  }

  json doc{{"first", io::observable_to_json(*first)},
           {"second", io::observable_to_json(*second)},
           {"method", args.method == JmMethod::Closed   ? "closed"
                      : args.method == JmMethod::Oracle ? "oracle"
                                                        : "both"}};

  std::optional<ClosedFormResult> closed;
  if (args.method != JmMethod::Oracle) {
    try {
      closed = jm_closed_form(*first, *second);
    } catch (const UnsupportedRegimeError& e) {
      if (args.method == JmMethod::Closed) {
        err << "jm: " << e.what() << " (try --method oracle)\n";
        return kUnsupportedRegime;
      }
    } catch (const InvalidObservableError& e) {
      err << "jm: " << e.what() << '\n';
      return kUsage;
    }
  }
  std::optional<OracleResult> oracle;
  if (args.method != JmMethod::Closed) oracle = jm_oracle(*first, *second);

  doc["margin"] = closed ? json(closed->margin) : json(nullptr);
  doc["boundary"] = closed ? json(closed->boundary) : json(nullptr);
  if (oracle) {
    doc["oracle"] = {{"jointly_measurable", oracle->jointly_measurable},
                     {"best_min_eigenvalue", oracle->best_min_eigenvalue},
                     {"witness", oracle->witness ? witness_json(*oracle->witness) : json(nullptr)}};
  }
  doc["jointly_measurable"] = closed ? closed->jointly_measurable : oracle->jointly_measurable;
  doc["methods_agree"] = closed && oracle
                             ? json(closed->jointly_measurable == oracle->jointly_measurable)
                             : json(nullptr);
  out << doc.dump(2) << '\n';
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Asymmetric Mach-Zehnder interferometer with a which-path detector.\n"
      "Angles are in radians; probabilities and visibilities are unitless in [0, 1]."};
  app.require_subcommand(1, 1);

  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
  std::string output;

  PatternArgs pattern_args;
  auto* pattern = app.add_subcommand("pattern", "Detection probabilities at both ports over phi");
  pattern->add_option("--scenario", pattern_args.scenario, "Scenario JSON file")->required();
  pattern->add_option("--phi-steps", pattern_args.phi_steps, "Points on [0, 2pi)")->required();
  pattern->add_option("--format", pattern_args.format)
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  pattern->add_option("--output", output, "Write to PATH instead of standard output");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep-r", "Path weights and visibilities over reflectivity");
  sweep->add_option("--scenario", sweep_args.scenario, "Scenario JSON file")->required();
  sweep->add_option("--r-steps", sweep_args.r_steps, "Points on [0.01, 0.99]")->required();
  sweep->add_option("--format", sweep_args.format)
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sweep->add_option("--output", output, "Write to PATH instead of standard output");

  DualityArgs duality_args;
  auto* duality = app.add_subcommand("duality", "Randomized verification of the duality relations");
  duality->add_option("--trials", duality_args.trials)->required();
  duality->add_option("--seed", duality_args.seed)->required();
  duality->add_option("--detector-dim", duality_args.detector_dim)->required();
  duality->add_flag("--pure-states", duality_args.pure_states, "Sample pure particle states");
  duality->add_flag("--optimal-strategy", duality_args.optimal_strategy,
                    "Use the optimal guessing strategy in every trial");
  duality->add_option("--threads", duality_args.threads, "Worker threads (output is identical)");
  duality->add_option("--summary", duality_args.summary_path, "JSON summary file (CSV mode)");
  duality->add_option("--format", duality_args.format)
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  duality->add_option("--output", output, "Write to PATH instead of standard output");

  JmArgs jm_args;
  auto* jm = app.add_subcommand("jm", "Joint measurability of two unsharp qubit observables");
  auto* x_opt = jm->add_option("--x", jm_args.x, "Bias of the first observable");
  auto* m_opt = jm->add_option("--m", jm_args.m, "Direction of the first observable")
                    ->delimiter(',')
                    ->allow_extra_args(false);
  auto* n_opt = jm->add_option("--n", jm_args.n, "Direction of the second observable")
                    ->delimiter(',')
                    ->allow_extra_args(false);
  auto* y_opt = jm->add_option("--y", jm_args.y, "Bias of the second observable (default 0)");
  auto* scen_opt = jm->add_option("--from-scenario", jm_args.from_scenario,
                                  "Use the pair induced by a scenario");
  jm->add_option("--subset", jm_args.subset, "Guess set S in the computational basis")
      ->delimiter(',');
  jm->add_option("--strategy", jm_args.strategy_path, "Strategy JSON file");
  auto* obs_opt = jm->add_option("--observables", jm_args.observables_path,
                                 "JSON array of two observables");
  const std::map<std::string, JmMethod> methods{
      {"closed", JmMethod::Closed}, {"oracle", JmMethod::Oracle}, {"both", JmMethod::Both}};
  jm->add_option("--method", jm_args.method)
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  jm->add_option("--output", output, "Write to PATH instead of standard output");
  for (auto* opt : {x_opt, m_opt, n_opt, y_opt}) {
    opt->excludes(scen_opt);
    opt->excludes(obs_opt);
  }
  scen_opt->excludes(obs_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!output.empty()) {
    file.open(output, std::ios::binary);
    if (!file) {
      err << "cannot write " << output << '\n';
      return kUsage;
    }
    sink = &file;
  }

  if (pattern->parsed()) return cmd_pattern(pattern_args, *sink, err);
  if (sweep->parsed()) return cmd_sweep_r(sweep_args, *sink, err);
  if (duality->parsed()) return cmd_duality(duality_args, *sink, err);
  return cmd_jm(jm_args, *sink, err);
}

}  // namespace mzd::cli
