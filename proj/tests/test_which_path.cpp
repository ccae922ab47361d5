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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mzd/errors.hpp"
#include "mzd/sampling.hpp"
#include "mzd/which_path.hpp"
#include "oracles.hpp"

using namespace mzd;
using mzd::testing::best_subset_distinguishability;
using mzd::testing::random_strategy;

namespace {

const DensityOperator kZero = DensityOperator::basis_state(2, 0);

UnitaryOperator quarter_turn_y() {
  return qubit_rotation(BlochVector::UnitY(), std::numbers::pi / 2);
}

}  // namespace

TEST_CASE("eta values") {
  const EtaPair all = eta_values(Strategy::computational(2, {0, 1}), kZero, quarter_turn_y());
  CHECK(std::abs(all.eta_s - 1.0) <= 1e-12);
  CHECK(std::abs(all.eta_s_u - 1.0) <= 1e-12);

  const EtaPair marked = eta_values(Strategy::computational(2, {0}), kZero, UnitaryOperator(pauli_x()));
  CHECK(marked.eta_s == 1.0);
  CHECK(marked.eta_s_u == 0.0);

  const EtaPair partial = eta_values(Strategy::computational(2, {0}), kZero, quarter_turn_y());
  CHECK(std::abs(partial.eta_s - 1.0) <= 1e-12);
  CHECK(std::abs(partial.eta_s_u - 0.5) <= 1e-12);

  CHECK_THROWS_AS(eta_values(Strategy::computational(3, {0}), kZero, quarter_turn_y()),
                  DimensionError);
}

TEST_CASE("strategy validation") {
  ComplexMatrix skewed = identity(2);
  skewed(0, 1) = 0.1;
  CHECK_THROWS_AS(Strategy(skewed, {0}), ContractViolation);
  CHECK_THROWS_AS(Strategy::computational(2, {2}), ContractViolation);
  const Strategy s = Strategy::computational(4, {3, 1, 1});
  CHECK(s.subset() == std::vector<std::size_t>{1, 3});
  CHECK(s.complement().subset() == std::vector<std::size_t>{0, 2});
  CHECK(max_abs_entry(s.projector() + s.complement().projector() - identity(4)) <= 1e-15);
}

TEST_CASE("likelihood, distinguishability and gamma examples") {
  const EtaPair perfect{1.0, 0.0};
  for (double w1 : {0.0, 0.3, 0.5, 1.0}) {
    CHECK(guess_likelihood(w1, 1 - w1, perfect) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(distinguishability(w1, 1 - w1, perfect) == doctest::Approx(1.0).epsilon(1e-15));
  }
  const EtaPair half{1.0, 0.5};
  CHECK(std::abs(guess_likelihood(0.5, 0.5, half) - 0.75) <= 1e-15);
  CHECK(std::abs(distinguishability(0.5, 0.5, half) - 0.5) <= 1e-15);
  CHECK(std::abs(gamma_term(0.5, 0.5, half) - 0.5) <= 1e-15);

  for (double eta : {0.0, 0.2, 0.7, 1.0}) {
    const EtaPair same{eta, eta};
    CHECK(std::abs(distinguishability(0.5, 0.5, same)) <= 1e-15);
    CHECK(std::abs(guess_likelihood(0.3, 0.7, same) - (0.3 * eta + 0.7 * (1 - eta))) <= 1e-15);
    CHECK(std::abs(gamma_term(1.0, 0.0, EtaPair{eta, 0.4}) - 2 * std::sqrt(eta * (1 - eta))) <=
          1e-15);
  }
  for (double a : {0.0, 1.0})
    for (double b : {0.0, 1.0}) CHECK(gamma_term(0.4, 0.6, EtaPair{a, b}) == 0.0);

  CHECK_THROWS_AS(guess_likelihood(0.5, 0.6, half), ContractViolation);
}

TEST_CASE("likelihood bounds and complement antisymmetry") {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const DensityOperator rho_d = random_density(d, rng);
    const UnitaryOperator u = haar_unitary(d, rng);
    const double w1 = uniform(rng, 0.0, 1.0);
    const double w2 = 1.0 - w1;
    const Strategy s = random_strategy(rng, d);
    const Strategy sbar = s.complement();
    const double l = guess_likelihood(w1, w2, eta_values(s, rho_d, u));
    const double l_bar = guess_likelihood(w1, w2, eta_values(sbar, rho_d, u));
    CHECK(l >= -1e-12);
    CHECK(l <= 1.0 + 1e-12);
    CHECK(std::max(l, l_bar) >= 0.5 - 1e-12);

    const double d_s = distinguishability(w1, w2, eta_values(s, rho_d, u));
    const double d_bar = distinguishability(w1, w2, eta_values(sbar, rho_d, u));
    CHECK(std::abs(d_s + d_bar) <= 1e-12);

    // Guessing the likelier path outright is the empty or the full subset.
    const double d_none = distinguishability(w1, w2, eta_values(Strategy(s.basis(), {}), rho_d, u));
    std::vector<std::size_t> every(d);
    for (std::size_t k = 0; k < d; ++k) every[k] = k;
    const double d_all = distinguishability(w1, w2, eta_values(Strategy(s.basis(), every), rho_d, u));
    CHECK(std::max({d_s, d_bar, d_none, d_all}) >= std::abs(w1 - w2) - 1e-12);
  }
}

TEST_CASE("helstrom bound") {
  CHECK(std::abs(helstrom_bound(kZero, UnitaryOperator(pauli_x()), 0.5, 0.5) - 1.0) <= 1e-12);
  CHECK(std::abs(helstrom_bound(kZero, UnitaryOperator::identity(2), 0.3, 0.7) - 0.4) <= 1e-12);
  CHECK(std::abs(helstrom_bound(kZero, quarter_turn_y(), 0.5, 0.5) - std::sqrt(0.5)) <= 1e-12);

  Rng rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 2 + trial % 7;
    ComplexVector psi(d);
    for (std::size_t k = 0; k < d; ++k) psi(k) = Complex(standard_normal(rng), standard_normal(rng));
    const DensityOperator rho_d = DensityOperator::pure(psi);
    const UnitaryOperator u = haar_unitary(d, rng);
    const double w1 = uniform(rng, 0.0, 1.0);
    const double w2 = 1.0 - w1;
    const ComplexVector n = psi.normalized();
    const double c = std::abs(n.dot(u.matrix() * n));
    // Two-level eigenproblem of w1|a><a| - w2|b><b| with |<a|b>| = c.
    const double expected = std::sqrt(1.0 - 4.0 * w1 * w2 * c * c);
    CHECK(std::abs(helstrom_bound(rho_d, u, w1, w2) - expected) <= 1e-10);
  }
}

TEST_CASE("optimize strategy") {
  SUBCASE("analytic examples") {
    const auto marked = optimize_strategy(kZero, UnitaryOperator(pauli_x()), 0.5, 0.5, 4);
    CHECK(std::abs(marked.distinguishability - 1.0) <= 1e-12);
    const auto same = optimize_strategy(kZero, UnitaryOperator::identity(2), 0.8, 0.2, 4);
    CHECK(std::abs(same.distinguishability - 0.6) <= 1e-12);
    const auto turned = optimize_strategy(kZero, quarter_turn_y(), 0.5, 0.5, 4);
    CHECK(std::abs(turned.distinguishability - std::sin(std::numbers::pi / 4)) <= 1e-12);
  }
  SUBCASE("zero budget") {
    CHECK_THROWS_AS(optimize_strategy(kZero, quarter_turn_y(), 0.5, 0.5, 0), DomainError);
  }
  SUBCASE("matches the bound and beats every subset of random bases") {
    Rng rng(33);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t d = 2 + trial % 7;
      const DensityOperator rho_d = random_density(d, rng);
      const UnitaryOperator u = haar_unitary(d, rng);
      const double w1 = uniform(rng, 0.0, 1.0);
      const double w2 = 1.0 - w1;
      const auto opt = optimize_strategy(rho_d, u, w1, w2, 4, static_cast<std::uint64_t>(trial));
      const double bound = helstrom_bound(rho_d, u, w1, w2);
      CHECK(opt.distinguishability <= bound + 1e-9);
      CHECK(std::abs(opt.distinguishability - bound) <= 1e-6);
      CHECK(opt.random_search_best <= bound + 1e-9);
      const double recomputed =
          distinguishability(w1, w2, eta_values(opt.strategy, rho_d, u));
      CHECK(std::abs(recomputed - opt.distinguishability) <= 1e-10);
      CHECK(best_subset_distinguishability(opt.strategy.basis(), rho_d, u, w1, w2) <= bound + 1e-9);
      const ComplexMatrix other = haar_unitary(d, rng).matrix();
      CHECK(best_subset_distinguishability(other, rho_d, u, w1, w2) <= opt.distinguishability + 1e-9);
    }
  }
}
