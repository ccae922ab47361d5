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

#include "mzd/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mzd/errors.hpp"
#include "mzd/tolerances.hpp"

namespace mzd {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a nonempty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (static_cast<std::size_t>(m.rows()) > tol::kMaxJointDim) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(m.rows()) +
                         " exceeds the supported maximum of " +
                         std::to_string(tol::kMaxJointDim));
  }
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

}  // namespace

double max_abs_entry(const ComplexMatrix& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) best = std::max(best, std::abs(m.data()[i]));
  return best;
}

bool is_hermitian(const ComplexMatrix& h, double tolerance) {
  if (h.rows() != h.cols()) return false;
  return max_abs_entry(h - h.adjoint()) <= tolerance;
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  require_square(matrix_, "DensityOperator");
  if (!all_finite(matrix_)) throw ContractViolation("DensityOperator: non-finite entry");
  if (!is_hermitian(matrix_, tol::kHermiticity)) {
    throw ContractViolation("DensityOperator: matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::kTrace) {
    throw ContractViolation("DensityOperator: trace " + std::to_string(tr.real()) + " != 1");
  }
  const auto eig = hermitian_eigenvalues(matrix_);
  if (eig.front() < tol::kPositivity) {
    throw ContractViolation("DensityOperator: negative eigenvalue " + std::to_string(eig.front()));
  }
}

DensityOperator DensityOperator::from_bloch(const BlochVector& v) {
  return DensityOperator(from_pauli(0.5, 0.5 * v));
}

DensityOperator DensityOperator::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw ContractViolation("DensityOperator::pure: zero vector");
  const ComplexVector unit = psi / norm;
  ComplexMatrix rho = unit * unit.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(std::move(rho));
}

DensityOperator DensityOperator::basis_state(std::size_t dim, std::size_t k) {
  if (k >= dim) throw DomainError("basis_state: index out of range");
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  rho(k, k) = 1.0;
  return DensityOperator(std::move(rho));
}

UnitaryOperator::UnitaryOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  require_square(matrix_, "UnitaryOperator");
  if (!all_finite(matrix_)) throw ContractViolation("UnitaryOperator: non-finite entry");
  const auto n = matrix_.rows();
  if (max_abs_entry(matrix_.adjoint() * matrix_ - ComplexMatrix::Identity(n, n)) >
      tol::kUnitarity) {
    throw ContractViolation("UnitaryOperator: U^dagger U != I");
  }
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
  return UnitaryOperator(mzd::identity(dim));
}

ComplexMatrix identity(std::size_t dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

UnitaryOperator qubit_rotation(const BlochVector& axis, double theta) {
  const double len = axis.norm();
  if (!(len > 0.0)) throw DomainError("qubit_rotation: zero axis");
  const BlochVector n = axis / len;
  const ComplexMatrix generator = n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
  ComplexMatrix u = std::cos(theta / 2.0) * identity(2) -
                    Complex(0.0, std::sin(theta / 2.0)) * generator;
  return UnitaryOperator(std::move(u));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() == 0 || b.rows() == 0) {
    throw DimensionError("tensor: both factors must be nonempty square matrices");
  }
  const auto da = a.rows();
  const auto db = b.rows();
  if (static_cast<std::size_t>(da * db) > tol::kMaxJointDim) {
    throw DimensionError("tensor: product dimension " + std::to_string(da * db) +
                         " exceeds the supported maximum of " +
                         std::to_string(tol::kMaxJointDim));
  }
  ComplexMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_detector(const ComplexMatrix& joint, std::size_t particle_dim,
                                     std::size_t detector_dim) {
  require_square(joint, "partial_trace_detector");
  if (particle_dim == 0 || detector_dim == 0 ||
      static_cast<std::size_t>(joint.rows()) != particle_dim * detector_dim) {
    throw DimensionError("partial_trace_detector: " + std::to_string(joint.rows()) +
                         " does not factor as " + std::to_string(particle_dim) + "*" +
                         std::to_string(detector_dim));
  }
  const auto p = static_cast<Eigen::Index>(particle_dim);
  const auto d = static_cast<Eigen::Index>(detector_dim);
  ComplexMatrix out = ComplexMatrix::Zero(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index k = 0; k < d; ++k) acc += joint(i * d + k, j * d + k);
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  require_square(h, "hermitian_eigenvalues");
  if (!is_hermitian(h, tol::kEigenInputHermiticity)) {
    throw ContractViolation("hermitian_eigenvalues: input is not Hermitian");
  }
  if (h.rows() == 1) return {h(0, 0).real()};
  if (h.rows() == 2) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return {mean - radius, mean + radius};
  }
  return hermitian_eigensystem(h).values;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  require_square(h, "hermitian_eigensystem");
  if (!is_hermitian(h, tol::kEigenInputHermiticity)) {
    throw ContractViolation("hermitian_eigensystem: input is not Hermitian");
  }
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw Error("hermitian_eigensystem: solver failed");

  HermitianEigensystem out;
  out.vectors = solver.eigenvectors();
  const auto& vals = solver.eigenvalues();
  out.values.assign(vals.data(), vals.data() + vals.size());

  const double scale = std::max(1.0, sym.cwiseAbs().rowwise().sum().maxCoeff());
  for (Eigen::Index k = 0; k < sym.rows(); ++k) {
    const double residual = (sym * out.vectors.col(k) - vals(k) * out.vectors.col(k)).norm();
    if (residual > tol::kEigenResidual * scale) {
      throw Error("hermitian_eigensystem: residual " + std::to_string(residual) +
                  " above tolerance");
    }
  }
  return out;
}

double trace_norm(const ComplexMatrix& h) {
  double total = 0.0;
  for (double v : hermitian_eigenvalues(h)) total += std::abs(v);
  return total;
}

PauliDecomposition pauli_decompose(const ComplexMatrix& h) {
  if (h.rows() != 2 || h.cols() != 2) throw DimensionError("pauli_decompose: expected 2x2");
  if (!is_hermitian(h, tol::kEigenInputHermiticity)) {
    throw ContractViolation("pauli_decompose: input is not Hermitian");
  }
  PauliDecomposition out;
  out.scalar = 0.5 * (h(0, 0).real() + h(1, 1).real());
  out.vector = BlochVector(0.5 * (h(0, 1).real() + h(1, 0).real()),
                           0.5 * (h(1, 0).imag() - h(0, 1).imag()),
                           0.5 * (h(0, 0).real() - h(1, 1).real()));
  return out;
}

ComplexMatrix from_pauli(double scalar, const BlochVector& v) {
  ComplexMatrix m(2, 2);
  m(0, 0) = scalar + v.z();
  m(1, 1) = scalar - v.z();
  m(0, 1) = Complex(v.x(), -v.y());
  m(1, 0) = Complex(v.x(), v.y());
  return m;
}

BlochVector bloch_vector(const DensityOperator& rho) {
  if (rho.dim() != 2) throw DimensionError("bloch_vector: expected a qubit state");
  return 2.0 * pauli_decompose(rho.matrix()).vector;
}

}  // namespace mzd
