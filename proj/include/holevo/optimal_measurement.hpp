// Copyright 2026 The holevo-gauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Linear Gaussian measurement plans: estimator vectors z_j whose quadrature
// observables R(z_j) are read out jointly, their achieved error, and the
// optical circuits that realize the two-mode plans.

#ifndef HOLEVO_OPTIMAL_MEASUREMENT_HPP_
#define HOLEVO_OPTIMAL_MEASUREMENT_HPP_

#include <optional>
#include <string>

#include "holevo/gaussian_model.hpp"

namespace holevo {

/// Unbiasedness tolerance on c_j^T z_k - delta_jk, relative to the size of
/// the product.
inline constexpr double kUnbiasedTolerance = 1e-9;

/// Shape tolerance used when recognizing a circuit.
inline constexpr double kCircuitMatchTolerance = 1e-8;

enum class CircuitType { kDoubleHomodyne, kDoubleUnbalancedHeterodyne };

const char* circuit_name(CircuitType type);

struct CircuitDescriptor {
  CircuitType type = CircuitType::kDoubleHomodyne;
  double t = 1.0;         ///< transmission of the second beam splitters
  bool feasible = true;   ///< false when t lies outside (0, 1]
};

/// Tr Re Z + TrAbs Im Z for Z_jk = alpha(z_j, z_k) + (i/2) Delta(z_j, z_k).
struct MseDecomposition {
  double trace_re = 0.0;
  double trabs_im = 0.0;
  double total = 0.0;
};

struct MeasurementPlan {
  MatrixXd z;            ///< row j is z_j in phase-space coordinates (l x 2n)
  /// The plan read off the optimizer before refinement. Equal to z when no
  /// refinement was applied.
  MatrixXd z_from_optimizer;
  bool refined = false;
  MatrixXd commutators;  ///< K_jk = Delta(z_j, z_k)
  MseDecomposition mse;
  std::optional<CircuitDescriptor> circuit;

  double achieved_mse() const { return mse.total; }
};

/// max_jk |c_j^T z_k - delta_jk|.
double unbiasedness_residual(const MatrixXd& z, const ProbeModel& model);

/// Throws BiasedPlanError if the plan is biased beyond kUnbiasedTolerance.
MseDecomposition achieved_mse(const MatrixXd& z, const ProbeModel& model);

/// Recognizes sqrt2 (t, 0, t-1, 0), sqrt2 (0, 1-t, 0, -t). Returns nothing for
/// any other shape.
std::optional<CircuitDescriptor> circuit_params(const MatrixXd& z);

/// The two-mode plan with transmission t (t = 1 is double homodyne).
MatrixXd tmst_plan(double t);

/// Exact minimizer of Tr Re Z + TrAbs Im Z over unbiased two-parameter plans.
///
/// With l = 2 the functional is max over |lambda| <= 1 of the quadratic
/// Tr(z A z^T) + lambda z_1^T Omega z_2, convex in z because A + (i/2)Omega
/// is PSD. Swapping min and max leaves a concave 1-D problem whose derivative
/// is the commutator of the inner minimizer, solved here by bisection. The
/// result is accurate to rounding, unlike plans read off an interior-point
/// optimizer whose error scales with the square root of the duality gap.
struct TwoParameterOptimum {
  MatrixXd z;
  double lambda = 0.0;  ///< multiplier of the commutator term
  double value = 0.0;   ///< minimal Tr Re Z + TrAbs Im Z
};
TwoParameterOptimum minimize_two_parameter_plan(const ProbeModel& model);

/// z-vectors from an optimizer: columns E F M^T (M F M^T)^{-1}. Throws
/// DegenerateOptimizerError if M F M^T is singular.
///
/// With `refine` set and two parameters, the plan is replaced by the exact
/// minimizer when that does not raise the achieved error. The optimizer's
/// own plan is kept in z_from_optimizer.
MeasurementPlan extract_plan(const ProbeModel& model, const EuclideanFrame& frame,
                             const MatrixXd& f_opt, bool refine = true);

}  // namespace holevo

#endif  // HOLEVO_OPTIMAL_MEASUREMENT_HPP_
