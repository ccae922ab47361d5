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

#include "mzd/sampling.hpp"

#include <cmath>

namespace mzd {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double standard_normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

namespace {

ComplexMatrix gaussian_matrix(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

UnitaryOperator haar_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix q = gaussian_matrix(dim, rng);
  const auto n = static_cast<Eigen::Index>(dim);
  // Modified Gram-Schmidt, run twice for orthogonality at machine precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index j = 0; j < k; ++j) {
        const Complex proj = q.col(j).dot(q.col(k));
        q.col(k) -= proj * q.col(j);
      }
      q.col(k).normalize();
    }
  }
  return UnitaryOperator(std::move(q));
}

DensityOperator random_density(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityOperator(std::move(rho));
}

BlochVector random_direction(Rng& rng) {
  BlochVector v;
  do {
    v = BlochVector(standard_normal(rng), standard_normal(rng), standard_normal(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

DensityOperator random_qubit_state(Rng& rng, bool pure) {
  const BlochVector dir = random_direction(rng);
  const double radius = pure ? 1.0 : std::cbrt(uniform(rng, 0.0, 1.0));
  return DensityOperator::from_bloch(radius * dir);
}

}  // namespace mzd
