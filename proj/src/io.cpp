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

#include "mzd/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>

#include "mzd/errors.hpp"

namespace mzd::io {

namespace {

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a complex number as [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ParseError(std::string("missing or non-numeric field \"") + key + "\"");
  }
  return j[key].get<double>();
}

const json& require_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j[key];
}

void reject_unknown(const json& j, std::initializer_list<const char*> known) {
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw ParseError("unknown field \"" + item.key() + "\"");
  }
}

// Constructor contract failures inside a document are reported as parse errors.
template <typename F>
auto rethrow_as_parse(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

ComplexMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be nonempty arrays");
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix is not rectangular");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_complex(j[i][k]);
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexVector parse_vector(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a nonempty array");
  ComplexVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = parse_complex(j[i]);
  return v;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

InterferometerConfig parse_scenario(const json& j) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  reject_unknown(j, {"r", "phi", "port", "particle_state", "detector_state", "detector_unitary"});
  return rethrow_as_parse("scenario", [&] {
    InterferometerConfig c;
    c.r = require_number(j, "r");
    c.phi = require_number(j, "phi");
    const json& port = require_field(j, "port");
    if (port == "A") {
      c.port = Port::A;
    } else if (port == "B") {
      c.port = Port::B;
    } else {
      throw ParseError("port must be \"A\" or \"B\"");
    }
    c.particle_state = DensityOperator(parse_matrix(require_field(j, "particle_state")));
    c.detector_state = DensityOperator(parse_matrix(require_field(j, "detector_state")));
    c.detector_unitary = UnitaryOperator(parse_matrix(require_field(j, "detector_unitary")));
    c.validate();
    return c;
  });
}

json scenario_to_json(const InterferometerConfig& c) {
  return json{{"r", c.r},
              {"phi", c.phi},
              {"port", port_name(c.port)},
              {"particle_state", matrix_to_json(c.particle_state.matrix())},
              {"detector_state", matrix_to_json(c.detector_state.matrix())},
              {"detector_unitary", matrix_to_json(c.detector_unitary.matrix())}};
}

Strategy parse_strategy(const json& j) {
  if (!j.is_object()) throw ParseError("strategy must be a JSON object");
  reject_unknown(j, {"basis", "subset"});
  const json& basis = require_field(j, "basis");
  const json& subset = require_field(j, "subset");
  if (!basis.is_array() || basis.empty()) throw ParseError("basis must be a nonempty array");
  if (!subset.is_array()) throw ParseError("subset must be an array of indices");

  const std::size_t d = basis.size();
  ComplexMatrix columns(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const ComplexVector v = parse_vector(basis[k]);
    if (static_cast<std::size_t>(v.size()) != d) {
      throw ParseError("basis vectors must have length equal to the number of vectors");
    }
    columns.col(static_cast<Eigen::Index>(k)) = v;
  }
  std::vector<std::size_t> indices;
  for (const auto& idx : subset) {
    if (!idx.is_number_unsigned()) throw ParseError("subset entries must be nonnegative integers");
    indices.push_back(idx.get<std::size_t>());
  }
  return rethrow_as_parse("strategy", [&] { return Strategy(columns, indices); });
}

json strategy_to_json(const Strategy& s) {
  json basis = json::array();
  for (Eigen::Index k = 0; k < s.basis().cols(); ++k) {
    basis.push_back(vector_to_json(s.basis().col(k)));
  }
  return json{{"basis", basis}, {"subset", s.subset()}};
}

UnsharpObservable parse_observable(const json& j) {
  if (!j.is_object()) throw ParseError("observable must be a JSON object");
  reject_unknown(j, {"bias", "direction"});
  const double bias = require_number(j, "bias");
  const json& dir = require_field(j, "direction");
  if (!dir.is_array() || dir.size() != 3) throw ParseError("direction must be [x, y, z]");
  BlochVector v;
  for (int i = 0; i < 3; ++i) {
    if (!dir[i].is_number()) throw ParseError("direction entries must be numbers");
    v(i) = dir[i].get<double>();
  }
  return rethrow_as_parse("observable", [&] { return UnsharpObservable(bias, v); });
}

json observable_to_json(const UnsharpObservable& obs) {
  const BlochVector& d = obs.direction();
  return json{{"bias", obs.bias()}, {"direction", {d.x(), d.y(), d.z()}}};
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trial_csv_header() {
  return "trial,detector_dim,port,degenerate,r,phi,w_plus,abs_rho01,P,V0,V,D_S,gamma_S,"
         "slack_prior,slack_sqrt_eta,slack_duality,slack_dv,jm_margin,jm_oracle_agrees,"
         "povm_deviation";
}

std::string trial_csv_row(const TrialRecord& rec) {
  std::string row = std::to_string(rec.trial) + ',' + std::to_string(rec.detector_dim) + ',' +
                    port_name(rec.port) + ',' + (rec.degenerate ? "1" : "0");
  for (double v : {rec.r, rec.phi, rec.w_plus, rec.abs_rho01, rec.predictability, rec.v0, rec.v,
                   rec.d_s, rec.gamma_s, rec.slack_prior, rec.slack_sqrt_eta, rec.slack_duality,
                   rec.slack_dv, rec.jm_margin}) {
    row += ',';
    row += format_double(v);
  }
  row += rec.jm_oracle_agrees ? ",1," : ",0,";
  row += format_double(rec.povm_deviation);
  return row;
}

void write_report_csv(const DualityReport& report, std::ostream& out) {
  out << trial_csv_header() << '\n';
  for (const TrialRecord& rec : report.trials) out << trial_csv_row(rec) << '\n';
}

namespace {

json stats_json(const InequalityStats& s) {
  // An empty suite leaves min_slack at +inf, which JSON cannot carry.
  return json{{"min_slack", std::isfinite(s.min_slack) ? json(s.min_slack) : json(nullptr)},
              {"violations", s.violations},
              {"saturated", s.saturated}};
}

}  // namespace

json report_summary(const DualityReport& report) {
  const SuiteOptions& o = report.options;
  return json{
      {"options",
       {{"seed", o.master_seed},
        {"trials", o.n_trials},
        {"detector_dim_min", o.dim_min},
        {"detector_dim_max", o.dim_max},
        {"pure_states", o.pure_states},
        {"optimal_strategy", o.optimal_strategy}}},
      {"prior", stats_json(report.prior)},
      {"sqrt_eta", stats_json(report.sqrt_eta)},
      {"duality", stats_json(report.duality)},
      {"dv", stats_json(report.dv)},
      {"violations", report.total_violations()},
      {"degenerate", report.degenerate},
      {"jm_agreement_rate", report.agreement_rate()},
      {"jm_disagreements", report.jm_disagreements},
      {"jm_max_disagreement_margin", report.max_disagreement_margin},
      {"max_povm_deviation", report.max_povm_deviation}};
}

}  // namespace mzd::io
