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

#include "mzd/which_path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mzd/errors.hpp"
#include "mzd/sampling.hpp"
#include "mzd/tolerances.hpp"

namespace mzd {

namespace {

void check_weights(double w1, double w2) {
  if (!(w1 >= 0.0 && w2 >= 0.0) || std::abs(w1 + w2 - 1.0) > tol::kViolation) {
    throw ContractViolation("path weights must be nonnegative and sum to 1");
  }
}

void check_detector(const DensityOperator& rho_d, const UnitaryOperator& u) {
  if (rho_d.dim() != u.dim()) {
    throw DimensionError("detector state and detector unitary dimensions differ");
  }
  if (rho_d.dim() > tol::kMaxDetectorDim) {
    throw DimensionError("detector dimension above " + std::to_string(tol::kMaxDetectorDim));
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// w1 rho_D - w2 U rho_D U^dagger.
ComplexMatrix weighted_difference(const DensityOperator& rho_d, const UnitaryOperator& u,
                                  double w1, double w2) {
  const ComplexMatrix& um = u.matrix();
  ComplexMatrix delta = w1 * rho_d.matrix() - w2 * (um * rho_d.matrix() * um.adjoint());
  return 0.5 * (delta + delta.adjoint());
}

}  // namespace

Strategy::Strategy(ComplexMatrix basis, std::vector<std::size_t> subset)
    : basis_(std::move(basis)), subset_(std::move(subset)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() == 0) {
    throw ContractViolation("strategy basis must be a nonempty square matrix of column vectors");
  }
  const auto n = basis_.rows();
  if (max_abs_entry(basis_.adjoint() * basis_ - ComplexMatrix::Identity(n, n)) >
      tol::kOrthonormality) {
    throw ContractViolation("strategy basis is not orthonormal");
  }
  std::sort(subset_.begin(), subset_.end());
  subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
  if (!subset_.empty() && subset_.back() >= static_cast<std::size_t>(n)) {
    throw ContractViolation("strategy subset index " + std::to_string(subset_.back()) +
                            " out of range for dimension " + std::to_string(n));
  }
}

Strategy Strategy::computational(std::size_t dim, std::vector<std::size_t> subset) {
  return Strategy(identity(dim), std::move(subset));
}

Strategy Strategy::complement() const {
  std::vector<std::size_t> rest;
  for (std::size_t k = 0, j = 0; k < dim(); ++k) {
    if (j < subset_.size() && subset_[j] == k) {
      ++j;
    } else {
      rest.push_back(k);
    }
  }
  return Strategy(basis_, std::move(rest));
}

ComplexMatrix Strategy::projector() const {
  ComplexMatrix p = ComplexMatrix::Zero(basis_.rows(), basis_.rows());
  for (std::size_t k : subset_) {
    const auto col = basis_.col(static_cast<Eigen::Index>(k));
    p += col * col.adjoint();
  }
  return p;
}

EtaPair eta_values(const Strategy& strategy, const DensityOperator& rho_d,
                   const UnitaryOperator& u) {
  check_detector(rho_d, u);
  if (strategy.dim() != rho_d.dim()) {
    throw DimensionError("strategy and detector dimensions differ");
  }
  const ComplexMatrix& um = u.matrix();
  const ComplexMatrix marked = um * rho_d.matrix() * um.adjoint();
  EtaPair out;
  for (std::size_t k : strategy.subset()) {
    const auto w = strategy.basis().col(static_cast<Eigen::Index>(k));
    out.eta_s += w.dot(rho_d.matrix() * w).real();
    out.eta_s_u += w.dot(marked * w).real();
  }
  out.eta_s = clamp01(out.eta_s);
  out.eta_s_u = clamp01(out.eta_s_u);
  return out;
}

double guess_likelihood(double w1, double w2, const EtaPair& etas) {
  check_weights(w1, w2);
  return w1 * etas.eta_s + w2 * etas.eta_sbar_u();
}

double distinguishability(double w1, double w2, const EtaPair& etas) {
  return 2.0 * guess_likelihood(w1, w2, etas) - 1.0;
}

double gamma_term(double w1, double w2, const EtaPair& etas) {
  check_weights(w1, w2);
  return 2.0 * std::abs(w1 * std::sqrt(etas.eta_s * etas.eta_sbar()) -
                        w2 * std::sqrt(etas.eta_s_u * etas.eta_sbar_u()));
}

double helstrom_bound(const DensityOperator& rho_d, const UnitaryOperator& u, double w1,
                      double w2) {
  check_detector(rho_d, u);
  check_weights(w1, w2);
  return trace_norm(weighted_difference(rho_d, u, w1, w2));
}

OptimizedStrategy optimize_strategy(const DensityOperator& rho_d, const UnitaryOperator& u,
                                    double w1, double w2, std::size_t search_budget,
                                    std::uint64_t seed) {
  if (search_budget == 0) throw DomainError("optimize_strategy: search budget must be positive");
  check_detector(rho_d, u);
  check_weights(w1, w2);

  const ComplexMatrix delta = weighted_difference(rho_d, u, w1, w2);
  const std::size_t d = rho_d.dim();

  // D_S = 2 sum_{W in S} <W|delta|W> + w2 - w1, so for a fixed basis the best
  // subset collects the outcomes with positive diagonal entries.
  const auto best_for_basis = [&](const ComplexMatrix& basis, std::vector<std::size_t>& subset) {
    subset.clear();
    double positive = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const auto w = basis.col(static_cast<Eigen::Index>(k));
      const double c = w.dot(delta * w).real();
      if (c > 0.0) {
        subset.push_back(k);
        positive += c;
      }
    }
    return 2.0 * positive + w2 - w1;
  };

  const HermitianEigensystem eig = hermitian_eigensystem(delta);
  std::vector<std::size_t> subset;
  best_for_basis(eig.vectors, subset);
  Strategy analytic(eig.vectors, subset);
  const double analytic_value = distinguishability(w1, w2, eta_values(analytic, rho_d, u));

  double random_best = -1.0;
  for (std::size_t k = 0; k < search_budget; ++k) {
    Rng rng(mix_seed(seed, k));
    const UnitaryOperator basis = haar_unitary(d, rng);
    random_best = std::max(random_best, best_for_basis(basis.matrix(), subset));
  }
  if (random_best > analytic_value + tol::kViolation) {
    throw Error("optimize_strategy: random basis beat the eigenbasis construction");
  }
  return {std::move(analytic), analytic_value, random_best};
}

}  // namespace mzd
