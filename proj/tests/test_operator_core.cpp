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

#include "mzd/errors.hpp"
#include "mzd/operator_core.hpp"
#include "mzd/sampling.hpp"
#include "oracles.hpp"

using namespace mzd;
using mzd::testing::kron_by_index;
using mzd::testing::random_hermitian;

namespace {

ComplexMatrix random_complex(Rng& rng, std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = Complex(standard_normal(rng), standard_normal(rng));
  return m;
}

}  // namespace

TEST_CASE("tensor of identities is the identity") {
  CHECK(max_abs_entry(tensor(identity(2), identity(2)) - identity(4)) == 0.0);
}

TEST_CASE("projector tensor detector state is block diagonal") {
  Rng rng(7);
  const ComplexMatrix rho_d = random_density(3, rng).matrix();
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const ComplexMatrix out = tensor(p0, rho_d);
  CHECK(max_abs_entry(out.block(0, 0, 3, 3) - rho_d) == 0.0);
  CHECK(max_abs_entry(out.block(0, 3, 3, 3)) == 0.0);
  CHECK(max_abs_entry(out.block(3, 0, 3, 3)) == 0.0);
  CHECK(max_abs_entry(out.block(3, 3, 3, 3)) == 0.0);
}

TEST_CASE("sigma_z tensor sigma_z diagonal") {
  const ComplexMatrix zz = tensor(pauli_z(), pauli_z());
  CHECK(zz(0, 0).real() == 1.0);
  CHECK(zz(1, 1).real() == -1.0);
  CHECK(zz(2, 2).real() == -1.0);
  CHECK(zz(3, 3).real() == 1.0);
}

TEST_CASE("tensor matches the index formula and rejects oversize products") {
  Rng rng(11);
  const ComplexMatrix a = random_complex(rng, 2);
  const ComplexMatrix b = random_complex(rng, 8);
  CHECK(max_abs_entry(tensor(a, b) - kron_by_index(a, b)) == 0.0);
  CHECK_THROWS_AS(tensor(random_complex(rng, 4), random_complex(rng, 8)), DimensionError);
  CHECK_THROWS_AS(tensor(ComplexMatrix::Zero(2, 3), identity(2)), DimensionError);
}

TEST_CASE("tensor is associative") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix a = random_complex(rng, 2);
    const ComplexMatrix b = random_complex(rng, 2);
    const ComplexMatrix c = random_complex(rng, 2);
    CHECK(max_abs_entry(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) <= 1e-14 * 8);
  }
}

TEST_CASE("partial trace over the detector") {
  Rng rng(3);
  SUBCASE("product state") {
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix rho = random_qubit_state(rng, false).matrix();
      const ComplexMatrix rho_d = random_density(1 + trial % 8, rng).matrix();
      CHECK(max_abs_entry(partial_trace_detector(tensor(rho, rho_d), 2, rho_d.rows()) - rho) <=
            1e-12);
    }
  }
  SUBCASE("maximally mixed") {
    CHECK(max_abs_entry(partial_trace_detector(identity(4) / 4.0, 2, 2) - identity(2) / 2.0) ==
          0.0);
  }
  SUBCASE("Bell projector") {
    const ComplexVector phi_plus = mzd::testing::ket({1.0, 0.0, 0.0, 1.0}) / std::sqrt(2.0);
    const ComplexMatrix bell = phi_plus * phi_plus.adjoint();
    CHECK(max_abs_entry(partial_trace_detector(bell, 2, 2) - identity(2) / 2.0) <= 1e-15);
  }
  SUBCASE("unnormalized detector factor divides out") {
    const ComplexMatrix a = random_complex(rng, 2);
    const ComplexMatrix b = random_density(3, rng).matrix() * 2.5;
    const ComplexMatrix reduced = partial_trace_detector(tensor(a, b), 2, 3) / b.trace();
    CHECK(max_abs_entry(reduced - a) <= 1e-12);
  }
  SUBCASE("mismatched factorization") {
    CHECK_THROWS_AS(partial_trace_detector(identity(6), 2, 2), DimensionError);
    CHECK_THROWS_AS(partial_trace_detector(identity(6), 4, 2), DimensionError);
  }
}

TEST_CASE("hermitian eigenvalues") {
  auto near = [](const std::vector<double>& got, std::vector<double> want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-14));
  };
  near(hermitian_eigenvalues(pauli_z()), {-1.0, 1.0});
  near(hermitian_eigenvalues(identity(2) / 2.0), {0.5, 0.5});
  const ComplexMatrix sharp = (identity(2) + 0.6 * pauli_x() + 0.8 * pauli_z()) / 2.0;
  const auto e = hermitian_eigenvalues(sharp);
  CHECK(std::abs(e[0]) <= 1e-15);
  CHECK(std::abs(e[1] - 1.0) <= 1e-15);

  ComplexMatrix skew = pauli_x();
  skew(0, 1) = 2.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(skew), ContractViolation);
  CHECK_THROWS_AS(hermitian_eigenvalues(tensor(pauli_y(), skew)), ContractViolation);
}

TEST_CASE("closed-form 2x2 spectrum agrees with the iterative solver") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 2);
    const auto closed = hermitian_eigenvalues(h);
    const auto iterative = hermitian_eigensystem(h).values;
    CHECK(std::abs(closed[0] - iterative[0]) <= 1e-12);
    CHECK(std::abs(closed[1] - iterative[1]) <= 1e-12);
  }
}

TEST_CASE("spectrum is unitarily invariant") {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 15;
    const ComplexMatrix h = random_hermitian(rng, d);
    const ComplexMatrix u = haar_unitary(d, rng).matrix();
    const auto a = hermitian_eigenvalues(h);
    const auto b = hermitian_eigenvalues(u * h * u.adjoint());
    for (std::size_t k = 0; k < d; ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-9);
  }
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(pauli_z()) == doctest::Approx(2.0));
  CHECK(trace_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  CHECK(trace_norm(d) == doctest::Approx(1.0));

  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 7;
    const ComplexMatrix a = random_hermitian(rng, dim);
    const ComplexMatrix b = random_hermitian(rng, dim);
    CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10);
  }
}

TEST_CASE("density and unitary operators validate their contracts") {
  ComplexMatrix bad_trace = identity(2);
  CHECK_THROWS_AS(DensityOperator{bad_trace}, ContractViolation);
  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityOperator{negative}, ContractViolation);
  ComplexMatrix skew = identity(2) / 2.0;
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityOperator{skew}, ContractViolation);
  CHECK_THROWS_AS(UnitaryOperator{identity(2) * 1.01}, ContractViolation);
  CHECK_THROWS_AS(DensityOperator{identity(32) / 32.0}, DimensionError);
  CHECK_NOTHROW(DensityOperator::from_bloch(BlochVector(0.6, 0.0, 0.8)));
}

TEST_CASE("pauli decomposition inverts from_pauli") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 2);
    const PauliDecomposition p = pauli_decompose(h);
    CHECK(max_abs_entry(from_pauli(p.scalar, p.vector) - h) <= 1e-14);
  }
  const BlochVector v(0.1, -0.2, 0.3);
  CHECK((bloch_vector(DensityOperator::from_bloch(v)) - v).norm() <= 1e-15);
}

TEST_CASE("qubit rotation about y by pi/2") {
  const ComplexMatrix u = qubit_rotation(BlochVector::UnitY(), std::numbers::pi / 2).matrix();
  CHECK(u(0, 0).real() == doctest::Approx(std::cos(std::numbers::pi / 4)));
  CHECK(u(1, 0).real() == doctest::Approx(std::sin(std::numbers::pi / 4)));
}
