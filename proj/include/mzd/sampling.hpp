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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mzd/operator_core.hpp"

namespace mzd {

using Rng = std::mt19937_64;

/// splitmix64 finalizer over (a, b); used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

double uniform(Rng& rng, double lo, double hi);
double standard_normal(Rng& rng);

/// Columns obtained by Gram-Schmidt on a complex Gaussian matrix (Haar measure).
UnitaryOperator haar_unitary(std::size_t dim, Rng& rng);

/// G G^dagger / tr(G G^dagger) with complex Gaussian G.
DensityOperator random_density(std::size_t dim, Rng& rng);

/// Uniform on the unit sphere.
BlochVector random_direction(Rng& rng);

/// Uniform in the Bloch ball, or on its surface when `pure` is set.
DensityOperator random_qubit_state(Rng& rng, bool pure);

}  // namespace mzd
