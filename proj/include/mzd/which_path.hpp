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

// Path-guessing strategies on the which-path detector. A strategy measures
// the detector in an orthonormal basis and guesses the first path (detector
// left in rho_D) on outcomes in S, the second path (detector left in
// U rho_D U^dagger) otherwise.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mzd/operator_core.hpp"

namespace mzd {

class Strategy {
 public:
  /// Columns of `basis` are the measurement vectors. Throws ContractViolation
  /// if they are not orthonormal or `subset` indexes past the dimension.
  Strategy(ComplexMatrix basis, std::vector<std::size_t> subset);

  static Strategy computational(std::size_t dim, std::vector<std::size_t> subset);

  const ComplexMatrix& basis() const { return basis_; }
  /// Sorted, duplicate free.
  const std::vector<std::size_t>& subset() const { return subset_; }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.rows()); }

  Strategy complement() const;
  /// Projector onto span{|W> : W in S}.
  ComplexMatrix projector() const;

 private:
  ComplexMatrix basis_;
  std::vector<std::size_t> subset_;
};

struct EtaPair {
  double eta_s = 0.0;
  double eta_s_u = 0.0;

  double eta_sbar() const { return 1.0 - eta_s; }
  double eta_sbar_u() const { return 1.0 - eta_s_u; }
};

EtaPair eta_values(const Strategy& strategy, const DensityOperator& rho_d,
                   const UnitaryOperator& u);

/// Probability of a correct guess: w1 eta_S + w2 eta_Sbar^U.
double guess_likelihood(double w1, double w2, const EtaPair& etas);

/// 2 L - 1.
double distinguishability(double w1, double w2, const EtaPair& etas);

/// 2 |w1 sqrt(eta_S eta_Sbar) - w2 sqrt(eta_S^U eta_Sbar^U)|.
double gamma_term(double w1, double w2, const EtaPair& etas);

/// Trace norm of w1 rho_D - w2 U rho_D U^dagger, the optimal distinguishability.
double helstrom_bound(const DensityOperator& rho_d, const UnitaryOperator& u, double w1,
                      double w2);

struct OptimizedStrategy {
  Strategy strategy;
  double distinguishability = 0.0;
  /// Best value reached by the random-basis cross-check alone.
  double random_search_best = 0.0;
};

/// Eigenbasis of w1 rho_D - w2 U rho_D U^dagger with S = positive eigenvalues,
/// cross-checked against `search_budget` Haar-random bases (each with its best
/// subset). DomainError when the budget is zero.
OptimizedStrategy optimize_strategy(const DensityOperator& rho_d, const UnitaryOperator& u,
                                    double w1, double w2, std::size_t search_budget,
                                    std::uint64_t seed = 0);

}  // namespace mzd
