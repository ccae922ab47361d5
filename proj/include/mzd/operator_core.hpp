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

// Small dense complex matrix algebra: Kronecker products, the partial trace
// over a detector factor, Hermitian spectra and qubit Bloch/Pauli forms.
// Joint dimensions are capped at tol::kMaxJointDim.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace mzd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using BlochVector = Eigen::Vector3d;

/// Positive semidefinite, Hermitian, unit-trace matrix. Validated on construction.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix);

  /// (I + v.sigma) / 2; requires |v| <= 1.
  static DensityOperator from_bloch(const BlochVector& v);
  /// |psi><psi| for a (not necessarily normalized) nonzero vector.
  static DensityOperator pure(const ComplexVector& psi);
  /// |k><k| in dimension dim.
  static DensityOperator basis_state(std::size_t dim, std::size_t k);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  Complex operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

 private:
  ComplexMatrix matrix_;
};

/// Square matrix with U^dagger U == I. Validated on construction.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(ComplexMatrix matrix);

  static UnitaryOperator identity(std::size_t dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

ComplexMatrix identity(std::size_t dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// exp(-i theta/2 axis.sigma) for a unit axis.
UnitaryOperator qubit_rotation(const BlochVector& axis, double theta);

bool is_hermitian(const ComplexMatrix& h, double tolerance);

/// Kronecker product; entry (i*db + k, j*db + l) = a(i,j) * b(k,l).
/// Throws DimensionError for non-square inputs or a result larger than 16x16.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the second (detector) factor of a particle_dim*detector_dim matrix.
ComplexMatrix partial_trace_detector(const ComplexMatrix& joint, std::size_t particle_dim,
                                     std::size_t detector_dim);

/// Ascending eigenvalues. Closed form for 2x2, self-adjoint solver otherwise.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

struct HermitianEigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h);

/// Sum of absolute eigenvalues.
double trace_norm(const ComplexMatrix& h);

/// h = scalar * I + vector . sigma for a 2x2 Hermitian h.
struct PauliDecomposition {
  double scalar = 0.0;
  BlochVector vector = BlochVector::Zero();
};

PauliDecomposition pauli_decompose(const ComplexMatrix& h);
ComplexMatrix from_pauli(double scalar, const BlochVector& vector);

/// Bloch vector of a qubit density operator.
BlochVector bloch_vector(const DensityOperator& rho);

double max_abs_entry(const ComplexMatrix& m);

}  // namespace mzd
