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

namespace mzd::tol {

/// Maximum deviation from A == A^dagger accepted for density operators.
inline constexpr double kHermiticity = 1e-12;
/// Smallest eigenvalue a density operator may have.
inline constexpr double kPositivity = -1e-12;
/// Unit-trace and U^dagger U == I checks.
inline constexpr double kTrace = 1e-12;
inline constexpr double kUnitarity = 1e-12;
/// Hermiticity accepted on input to the eigensolver.
inline constexpr double kEigenInputHermiticity = 1e-10;
/// Residual bound ||Hv - lambda v|| for the iterative eigensolver.
inline constexpr double kEigenResidual = 1e-10;
/// Orthonormality of a strategy basis.
inline constexpr double kOrthonormality = 1e-10;
/// |bias| + |direction| <= 1 + this for unsharp observables.
inline constexpr double kObservableValidity = 1e-12;
/// Positivity slack for joint-observable effects and oracle constraints.
inline constexpr double kJointPositivity = 1e-9;
inline constexpr double kJointCompleteness = 1e-10;
/// Margins and slacks below -kViolation count as violations; |slack| within it is saturation.
inline constexpr double kViolation = 1e-9;
/// Cross products below this make two Bloch directions parallel.
inline constexpr double kParallel = 1e-12;
/// |tr(rho_D U)| below this leaves the detector phase undefined (set to zero).
inline constexpr double kOverlapPhase = 1e-15;
/// A priori visibility below this is treated as zero when forming V^2 / V0^2.
inline constexpr double kVisibilityFloor = 1e-12;

/// Largest joint (particle x detector) dimension supported.
inline constexpr std::size_t kMaxJointDim = 16;
inline constexpr std::size_t kMaxDetectorDim = 8;

}  // namespace mzd::tol
