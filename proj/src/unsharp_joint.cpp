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

#include "mzd/unsharp_joint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mzd/errors.hpp"
#include "mzd/tolerances.hpp"

namespace mzd {

namespace {

// Slack allowed on (1 +- x)^2 - |m|^2 before an observable counts as invalid.
constexpr double kRadicandSlack = 1e-10;

// Oracle grid: 21 points per axis, coarse half-width 1, refined by 10x down to
// a step of 1e-10. A window whose best point lies on its edge is re-centered at
// the same step (at most kMaxRecenters times) before refining.
constexpr int kGridHalfPoints = 10;
constexpr double kCoarseStep = 0.1;
constexpr double kFinalStep = 1e-10;
constexpr int kMaxRecenters = 8;

// Bloch form of the four oracle constraints, with the trace part of G
// eliminated exactly: for fixed g the constraints are min(g0 + lower, upper - g0),
// maximized at g0 = (upper - lower) / 2.
struct ConstraintGeometry {
  double a0, b0, e0;
  BlochVector a, b, e;

  ConstraintGeometry(const UnsharpObservable& first, const UnsharpObservable& second)
      : a0(0.5 * (1.0 + first.bias())),
        b0(0.5 * (1.0 + second.bias())),
        e0(a0 + b0 - 1.0),
        a(0.5 * first.direction()),
        b(0.5 * second.direction()),
        e(a + b) {}

  struct Value {
    double min_eig;
    double g0;
  };

  Value at(const BlochVector& g) const {
    const double lower = std::min(-g.norm(), -e0 - (g - e).norm());
    const double upper = std::min(a0 - (a - g).norm(), b0 - (b - g).norm());
    return {0.5 * (lower + upper), 0.5 * (upper - lower)};
  }
};

}  // namespace

UnsharpObservable::UnsharpObservable(double bias, const BlochVector& direction)
    : bias_(bias), direction_(direction) {
  if (!std::isfinite(bias) || !direction.allFinite()) {
    throw InvalidObservableError("unsharp observable has non-finite parameters");
  }
  if (std::abs(bias) + direction.norm() > 1.0 + tol::kObservableValidity) {
    throw InvalidObservableError("unsharp observable violates |bias| + |direction| <= 1 (" +
                                 std::to_string(std::abs(bias) + direction.norm()) + ")");
  }
}

ComplexMatrix UnsharpObservable::effect_plus() const {
  return from_pauli(0.5 * (1.0 + bias_), 0.5 * direction_);
}

ComplexMatrix UnsharpObservable::effect_minus() const {
  return from_pauli(0.5 * (1.0 - bias_), -0.5 * direction_);
}

double JointObservable::min_eigenvalue() const {
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& row : effects) {
    for (const auto& m : row) lowest = std::min(lowest, hermitian_eigenvalues(m).front());
  }
  return lowest;
}

double JointObservable::completeness_error() const {
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (const auto& row : effects) {
    for (const auto& m : row) sum += m;
  }
  return max_abs_entry(sum - identity(2));
}

double JointObservable::marginal_error(const UnsharpObservable& first,
                                       const UnsharpObservable& second) const {
  double worst = 0.0;
  worst = std::max(worst, max_abs_entry(effects[0][0] + effects[0][1] - first.effect_plus()));
  worst = std::max(worst, max_abs_entry(effects[1][0] + effects[1][1] - first.effect_minus()));
  worst = std::max(worst, max_abs_entry(effects[0][0] + effects[1][0] - second.effect_plus()));
  worst = std::max(worst, max_abs_entry(effects[0][1] + effects[1][1] - second.effect_minus()));
  return worst;
}

UnsharpObservable interference_observable(const InterferometerConfig& config) {
  config.validate();
  const double r = config.r;
  const double transverse = 2.0 * config.visibility_ratio() * std::sqrt(r * config.t());
  const double angle = config.phi + config.delta();
  BlochVector n(transverse * std::cos(angle), transverse * std::sin(angle), 2.0 * r - 1.0);
  if (config.port == Port::B) n = -n;
  return UnsharpObservable(0.0, n);
}

namespace {

// tr_D[U_QD^dagger X U_QD (I (x) rho_D)].
ComplexMatrix pulled_back_effect(const InterferometerConfig& config, const ComplexMatrix& x) {
  const ComplexMatrix u = coupling_unitary(config).matrix();
  const ComplexMatrix detector_part = tensor(identity(2), config.detector_state.matrix());
  ComplexMatrix effect =
      partial_trace_detector(u.adjoint() * x * u * detector_part, 2, config.detector_dim());
  return effect;
}

}  // namespace

ComplexMatrix interference_effect_brute_force(const InterferometerConfig& config) {
  ComplexMatrix port_projector = ComplexMatrix::Zero(2, 2);
  const Eigen::Index k = config.port == Port::A ? 0 : 1;
  port_projector(k, k) = 1.0;
  return pulled_back_effect(config, tensor(port_projector, identity(config.detector_dim())));
}

UnsharpObservable guess_observable(const Strategy& strategy, const DensityOperator& rho_d,
                                   const UnitaryOperator& u) {
  const EtaPair etas = eta_values(strategy, rho_d, u);
  return UnsharpObservable(etas.eta_s + etas.eta_s_u - 1.0,
                           BlochVector(0.0, 0.0, etas.eta_s - etas.eta_s_u));
}

ComplexMatrix guess_effect_brute_force(const InterferometerConfig& config,
                                       const Strategy& strategy) {
  if (strategy.dim() != config.detector_dim()) {
    throw DimensionError("strategy and detector dimensions differ");
  }
  return pulled_back_effect(config, tensor(identity(2), strategy.projector()));
}

ClosedFormResult jm_closed_form(const UnsharpObservable& first,
                                const UnsharpObservable& second) {
  if (second.bias() != 0.0) {
    throw UnsupportedRegimeError(
        "closed-form joint measurability needs an unbiased second observable; use the oracle");
  }
  const double x = first.bias();
  const BlochVector& m = first.direction();
  const BlochVector& n = second.direction();
  const double m2 = m.squaredNorm();

  const double plus = (1.0 + x) * (1.0 + x) - m2;
  const double minus = (1.0 - x) * (1.0 - x) - m2;
  if (plus < -kRadicandSlack || minus < -kRadicandSlack) {
    throw InvalidObservableError("first observable has (1 +- x)^2 < |m|^2");
  }
  const double lhs = std::sqrt(std::max(plus, 0.0)) + std::sqrt(std::max(minus, 0.0));

  double rhs = 0.0;
  const double cross = m.cross(n).norm();
  // A trivial first observable or parallel directions commute with everything relevant.
  if (m.norm() > 0.0 && cross >= tol::kParallel) {
    const double dot = m.dot(n);
    const double denom2 = m2 - dot * dot;
    if (!(denom2 > 0.0)) {
      throw InvalidObservableError("second observable direction longer than 1");
    }
    rhs = 2.0 * cross / std::sqrt(denom2);
  }

  ClosedFormResult out;
  out.margin = lhs - rhs;
  out.jointly_measurable = out.margin >= -tol::kViolation;
  out.boundary = std::abs(out.margin) <= tol::kViolation;
  return out;
}

OracleResult jm_oracle(const UnsharpObservable& first, const UnsharpObservable& second) {
  const ConstraintGeometry geom(first, second);
  const auto feasible = [](double v) { return v >= -tol::kJointPositivity; };

  // Vertices of the constraint geometry (G = 0, O_+, O'_+, O_+ + O'_+ - I) and
  // their midpoint; degenerate feasible sets collapse onto one of these.
  BlochVector best_g = 0.5 * (geom.a + geom.b);
  ConstraintGeometry::Value best = geom.at(best_g);
  for (const BlochVector& g : {BlochVector(BlochVector::Zero()), geom.a, geom.b, geom.e}) {
    const auto value = geom.at(g);
    if (value.min_eig > best.min_eig) {
      best = value;
      best_g = g;
    }
  }

  for (double step = kCoarseStep; step >= kFinalStep * 0.5 && !feasible(best.min_eig);
       step /= 10.0) {
    for (int pass = 0; pass <= kMaxRecenters && !feasible(best.min_eig); ++pass) {
      const BlochVector center = best_g;
      Eigen::Vector3i best_offset = Eigen::Vector3i::Zero();
      for (int i = -kGridHalfPoints; i <= kGridHalfPoints && !feasible(best.min_eig); ++i) {
        for (int j = -kGridHalfPoints; j <= kGridHalfPoints; ++j) {
          for (int k = -kGridHalfPoints; k <= kGridHalfPoints; ++k) {
            const BlochVector g = center + step * BlochVector(i, j, k);
            const auto value = geom.at(g);
            if (value.min_eig > best.min_eig) {
              best = value;
              best_g = g;
              best_offset = Eigen::Vector3i(i, j, k);
            }
          }
        }
      }
      if (best_offset.cwiseAbs().maxCoeff() < kGridHalfPoints) break;
    }
  }

  OracleResult out;
  out.best_min_eigenvalue = best.min_eig;
  out.jointly_measurable = feasible(best.min_eig);
  if (out.jointly_measurable) {
    out.witness = assemble_joint(from_pauli(best.g0, best_g), first, second);
  }
  return out;
}

JointObservable assemble_joint(const ComplexMatrix& g, const UnsharpObservable& first,
                               const UnsharpObservable& second) {
  if (g.rows() != 2 || g.cols() != 2) throw DimensionError("assemble_joint: G must be 2x2");
  if (!is_hermitian(g, tol::kEigenInputHermiticity)) {
    throw InfeasibleWitnessError("assemble_joint: G is not Hermitian");
  }
  const ComplexMatrix o1 = first.effect_plus();
  const ComplexMatrix o2 = second.effect_plus();
  JointObservable joint;
  joint.effects[0][0] = g;
  joint.effects[0][1] = o1 - g;
  joint.effects[1][0] = o2 - g;
  joint.effects[1][1] = identity(2) - o1 - o2 + g;
  const double lowest = joint.min_eigenvalue();
  if (lowest < -tol::kJointPositivity) {
    throw InfeasibleWitnessError("assemble_joint: effect has eigenvalue " +
                                 std::to_string(lowest));
  }
  return joint;
}

}  // namespace mzd
