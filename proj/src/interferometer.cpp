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

#include "mzd/interferometer.hpp"

#include <cmath>
#include <string>

#include "mzd/errors.hpp"
#include "mzd/tolerances.hpp"

namespace mzd {

namespace {

// Port normalizations: rw+ + tw- for A, tw+ + rw- for B.
double port_norm(const InterferometerConfig& c, Port port) {
  return port == Port::A ? c.r * c.w_plus() + c.t() * c.w_minus()
                         : c.t() * c.w_plus() + c.r * c.w_minus();
}

double checked_port_norm(const InterferometerConfig& c, Port port) {
  const double norm = port_norm(c, port);
  if (!(norm > 0.0)) {
    throw DegeneratePortError(std::string("port ") + port_name(port) +
                              " never fires for this configuration");
  }
  return norm;
}

}  // namespace

const char* port_name(Port port) { return port == Port::A ? "A" : "B"; }

double InterferometerConfig::w_plus() const { return particle_state(0, 0).real(); }
double InterferometerConfig::w_minus() const { return particle_state(1, 1).real(); }
Complex InterferometerConfig::coherence() const { return particle_state(0, 1); }
double InterferometerConfig::alpha() const { return std::arg(coherence()); }

Complex InterferometerConfig::detector_overlap() const {
  return (detector_state.matrix() * detector_unitary.matrix()).trace();
}

double InterferometerConfig::delta() const {
  const Complex overlap = detector_overlap();
  if (std::abs(overlap) < tol::kOverlapPhase) return 0.0;
  return -std::arg(overlap);
}

double InterferometerConfig::visibility_ratio() const { return std::abs(detector_overlap()); }

void InterferometerConfig::validate() const {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
    throw DomainError("reflectivity r = " + std::to_string(r) + " outside [0, 1]");
  }
  if (!std::isfinite(phi)) throw DomainError("phase phi is not finite");
  if (particle_state.dim() != 2) throw DimensionError("particle state must be a qubit");
  if (detector_state.dim() > tol::kMaxDetectorDim) {
    throw DimensionError("detector dimension " + std::to_string(detector_state.dim()) +
                         " exceeds " + std::to_string(tol::kMaxDetectorDim));
  }
  if (detector_unitary.dim() != detector_state.dim()) {
    throw DimensionError("detector unitary and detector state dimensions differ");
  }
}

UnitaryOperator beam_splitter_unitary(double r) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
    throw DomainError("beam splitter reflectivity " + std::to_string(r) + " outside [0, 1]");
  }
  const double sr = std::sqrt(r);
  const double st = std::sqrt(1.0 - r);
  ComplexMatrix b(2, 2);
  b << sr, st, st, -sr;
  return UnitaryOperator(std::move(b));
}

UnitaryOperator coupling_unitary(const InterferometerConfig& config) {
  config.validate();
  const ComplexMatrix b = beam_splitter_unitary(config.r).matrix();
  const std::size_t d = config.detector_dim();

  // |phi_a><a| = column a of B placed in column a.
  ComplexMatrix dyad0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix dyad1 = ComplexMatrix::Zero(2, 2);
  dyad0.col(0) = b.col(0);
  dyad1.col(1) = b.col(1);

  const Complex plus = std::polar(1.0, config.phi / 2.0);
  const Complex minus = std::polar(1.0, -config.phi / 2.0);
  ComplexMatrix u_qd = plus * tensor(dyad0, identity(d)) +
                       minus * tensor(dyad1, config.detector_unitary.matrix());
  return UnitaryOperator(std::move(u_qd));
}

DensityOperator final_state(const InterferometerConfig& config) {
  const ComplexMatrix u = coupling_unitary(config).matrix();
  const ComplexMatrix initial =
      tensor(config.particle_state.matrix(), config.detector_state.matrix());
  ComplexMatrix out = u * initial * u.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityOperator(std::move(out));
}

double detection_probability(const InterferometerConfig& config) {
  const DensityOperator rho_f = final_state(config);
  const ComplexMatrix reduced = partial_trace_detector(rho_f.matrix(), 2, config.detector_dim());
  const double p_a = reduced(0, 0).real();
  return config.port == Port::A ? p_a : 1.0 - p_a;
}

double detection_probability_closed_form(const InterferometerConfig& config) {
  config.validate();
  const double r = config.r;
  const double t = config.t();
  const double fringe = 2.0 * std::sqrt(r * t) * std::abs(config.coherence()) *
                        config.visibility_ratio() *
                        std::cos(config.phi + config.alpha() + config.delta());
  if (config.port == Port::A) return r * config.w_plus() + t * config.w_minus() + fringe;
  return t * config.w_plus() + r * config.w_minus() - fringe;
}

PathWeights path_weights(const InterferometerConfig& config) {
  config.validate();
  const double norm_a = checked_port_norm(config, Port::A);
  const double norm_b = checked_port_norm(config, Port::B);
  const double r = config.r;
  const double t = config.t();
  PathWeights w;
  w.w1 = r * config.w_plus() / norm_a;
  w.w2 = t * config.w_minus() / norm_a;
  w.w3 = t * config.w_plus() / norm_b;
  w.w4 = r * config.w_minus() / norm_b;
  return w;
}

PortWeights port_weights(const InterferometerConfig& config) {
  config.validate();
  const double norm = checked_port_norm(config, config.port);
  const double r = config.r;
  const double t = config.t();
  if (config.port == Port::A) return {r * config.w_plus() / norm, t * config.w_minus() / norm};
  return {t * config.w_plus() / norm, r * config.w_minus() / norm};
}

double predictability(const InterferometerConfig& config) {
  const PortWeights w = port_weights(config);
  return std::abs(w.first - w.second);
}

double a_priori_visibility(const InterferometerConfig& config) {
  config.validate();
  const double norm = checked_port_norm(config, config.port);
  return 2.0 * std::sqrt(config.r * config.t()) * std::abs(config.coherence()) / norm;
}

double fringe_visibility(const InterferometerConfig& config) {
  return a_priori_visibility(config) * config.visibility_ratio();
}

}  // namespace mzd
