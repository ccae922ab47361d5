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

// Two-outcome qubit observables O_+- = (I +- (bias I + direction.sigma)) / 2,
// the pair of them measured by the interferometer, and two independent ways of
// deciding whether a pair admits a joint four-outcome observable.

#pragma once

#include <array>
#include <optional>

#include "mzd/interferometer.hpp"
#include "mzd/operator_core.hpp"
#include "mzd/which_path.hpp"

namespace mzd {

class UnsharpObservable {
 public:
  /// Throws InvalidObservableError unless |bias| + |direction| <= 1.
  UnsharpObservable(double bias, const BlochVector& direction);

  double bias() const { return bias_; }
  const BlochVector& direction() const { return direction_; }

  ComplexMatrix effect_plus() const;
  ComplexMatrix effect_minus() const;

 private:
  double bias_;
  BlochVector direction_;
};

/// Effects indexed [first outcome][second outcome], 0 = '+', 1 = '-'.
struct JointObservable {
  std::array<std::array<ComplexMatrix, 2>, 2> effects;

  const ComplexMatrix& plus_plus() const { return effects[0][0]; }
  const ComplexMatrix& plus_minus() const { return effects[0][1]; }
  const ComplexMatrix& minus_plus() const { return effects[1][0]; }
  const ComplexMatrix& minus_minus() const { return effects[1][1]; }

  /// Smallest eigenvalue across the four effects.
  double min_eigenvalue() const;
  /// max |sum of effects - I|.
  double completeness_error() const;
  /// Largest entrywise deviation of both marginals from their parents.
  double marginal_error(const UnsharpObservable& first, const UnsharpObservable& second) const;
};

/// Effect N_0 of "the configured port fires", as a Bloch-form observable with
/// zero bias. Port B returns the negated direction.
UnsharpObservable interference_observable(const InterferometerConfig& config);

/// tr_D[U_QD^dagger (Pi_port (x) I) U_QD (I (x) rho_D)] by explicit matrix products.
ComplexMatrix interference_effect_brute_force(const InterferometerConfig& config);

/// M_S in Bloch form: bias eta_S + eta_S^U - 1, direction (0, 0, eta_S - eta_S^U).
UnsharpObservable guess_observable(const Strategy& strategy, const DensityOperator& rho_d,
                                   const UnitaryOperator& u);

/// sum_{W in S} tr_D[U_QD^dagger (I (x) |W><W|) U_QD (I (x) rho_D)] by explicit products.
ComplexMatrix guess_effect_brute_force(const InterferometerConfig& config,
                                       const Strategy& strategy);

struct ClosedFormResult {
  bool jointly_measurable = false;
  /// LHS - RHS of the criterion; nonnegative iff jointly measurable.
  double margin = 0.0;
  /// |margin| <= tol::kViolation.
  bool boundary = false;
};

/// Closed-form test for a biased first observable and an unbiased second one.
/// UnsupportedRegimeError when the second bias is nonzero.
ClosedFormResult jm_closed_form(const UnsharpObservable& first, const UnsharpObservable& second);

struct OracleResult {
  bool jointly_measurable = false;
  /// Best achieved min eigenvalue over the four positivity constraints.
  double best_min_eigenvalue = 0.0;
  std::optional<JointObservable> witness;
};

/// Grid search for G with G >= 0, O_+ - G >= 0, O'_+ - G >= 0 and
/// G - (O_+ + O'_+ - I) >= 0. Works for any biases.
OracleResult jm_oracle(const UnsharpObservable& first, const UnsharpObservable& second);

/// M_++ = G, M_+- = O_+ - G, M_-+ = O'_+ - G, M_-- = I - O_+ - O'_+ + G.
/// InfeasibleWitnessError if any effect has an eigenvalue below -1e-9.
JointObservable assemble_joint(const ComplexMatrix& g, const UnsharpObservable& first,
                               const UnsharpObservable& second);

}  // namespace mzd
