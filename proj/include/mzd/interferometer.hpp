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

// Mach-Zehnder interferometer with a symmetric first beam splitter (absorbed
// into the particle state), phase shifts +-phi/2 on the two arms, a
// controlled-U coupling to a which-path detector and an asymmetric second
// beam splitter of reflectivity r.

#pragma once

#include <cstddef>

#include "mzd/operator_core.hpp"

namespace mzd {

enum class Port { A, B };

const char* port_name(Port port);

/// Everything needed to describe one run of the interferometer. The particle
/// state is the state after the first beam splitter.
struct InterferometerConfig {
  double r = 0.5;
  double phi = 0.0;
  DensityOperator particle_state = DensityOperator::basis_state(2, 0);
  DensityOperator detector_state = DensityOperator::basis_state(2, 0);
  UnitaryOperator detector_unitary = UnitaryOperator::identity(2);
  Port port = Port::A;

  double t() const { return 1.0 - r; }
  std::size_t detector_dim() const { return detector_state.dim(); }

  /// <0|rho|0> and <1|rho|1>.
  double w_plus() const;
  double w_minus() const;
  /// <0|rho|1> = |.| e^{i alpha}.
  Complex coherence() const;
  double alpha() const;
  /// tr(rho_D U) = |.| e^{-i delta}.
  Complex detector_overlap() const;
  /// Zero when the overlap vanishes.
  double delta() const;
  /// |tr(rho_D U)|, which equals V / V0.
  double visibility_ratio() const;

  /// Throws DomainError / DimensionError if the pieces are inconsistent.
  void validate() const;
};

/// Four conditional path probabilities: 1,2 feed port A, 3,4 feed port B.
struct PathWeights {
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;
  double w4 = 0.0;
};

/// [[sqrt r, sqrt t], [sqrt t, -sqrt r]]; DomainError outside [0, 1].
UnitaryOperator beam_splitter_unitary(double r);

/// e^{i phi/2} |phi_0><0| (x) I + e^{-i phi/2} |phi_1><1| (x) U on the 2d-dim joint space.
UnitaryOperator coupling_unitary(const InterferometerConfig& config);

/// U_QD (rho (x) rho_D) U_QD^dagger.
DensityOperator final_state(const InterferometerConfig& config);

/// Probability the configured port fires, traced from the joint final state.
double detection_probability(const InterferometerConfig& config);

/// Same quantity from r w+ + t w- +- 2 sqrt(rt) |rho01 tr(rho_D U)| cos(phi + alpha + delta).
double detection_probability_closed_form(const InterferometerConfig& config);

/// Throws DegeneratePortError when either port's normalization vanishes.
PathWeights path_weights(const InterferometerConfig& config);

/// |w1 - w2| at port A, |w3 - w4| at port B.
double predictability(const InterferometerConfig& config);

/// Fringe contrast of the port with the detector switched off.
double a_priori_visibility(const InterferometerConfig& config);

/// V0 |tr(rho_D U)|.
double fringe_visibility(const InterferometerConfig& config);

/// The two path weights feeding the configured port: (w1, w2) or (w3, w4).
struct PortWeights {
  double first = 0.0;   // path from |0>, leaves the detector in rho_D
  double second = 0.0;  // path from |1>, leaves the detector in U rho_D U^dagger
};

PortWeights port_weights(const InterferometerConfig& config);

}  // namespace mzd
