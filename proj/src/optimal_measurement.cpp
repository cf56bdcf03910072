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

#include "holevo/optimal_measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holevo/errors.hpp"

namespace holevo {

const char* circuit_name(CircuitType type) {
  return type == CircuitType::kDoubleHomodyne ? "double_homodyne"
                                              : "double_unbalanced_heterodyne";
}

double unbiasedness_residual(const MatrixXd& z, const ProbeModel& model) {
  if (z.rows() != model.n_params() || z.cols() != model.covariance().rows()) {
    throw InputError("plan has the wrong shape for the probe");
  }
  const MatrixXd gram = model.mean_coeffs() * z.transpose();
  return (gram - MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

MseDecomposition achieved_mse(const MatrixXd& z, const ProbeModel& model) {
  const double resid = unbiasedness_residual(z, model);
  const double scale = std::max(
      1.0, model.mean_coeffs().cwiseAbs().maxCoeff() * z.cwiseAbs().maxCoeff());
  if (resid > kUnbiasedTolerance * scale) {
    throw BiasedPlanError("plan is biased: max |c_j^T z_k - delta_jk| = " +
                          std::to_string(resid));
  }
  const MatrixXd re = z * model.covariance() * z.transpose();
  const MatrixXd k = z * symplectic_matrix(model.n_modes()) * z.transpose();
  MseDecomposition out;
  out.trace_re = re.trace();
  out.trabs_im = trabs(MatrixXd(0.25 * (k - k.transpose())));
  out.total = out.trace_re + out.trabs_im;
  return out;
}

MatrixXd tmst_plan(double t) {
  const double s = std::sqrt(2.0);
  MatrixXd z(2, 4);
  z << s * t, 0.0, s * (t - 1.0), 0.0,
       0.0, s * (1.0 - t), 0.0, -s * t;
  return z;
}

std::optional<CircuitDescriptor> circuit_params(const MatrixXd& z) {
  if (z.rows() != 2 || z.cols() != 4) return std::nullopt;
  const double t = z(0, 0) / std::sqrt(2.0);
  if ((z - tmst_plan(t)).cwiseAbs().maxCoeff() > kCircuitMatchTolerance) {
    return std::nullopt;
  }
  CircuitDescriptor c;
  if (std::abs(t - 1.0) <= kCircuitMatchTolerance) {
    c.type = CircuitType::kDoubleHomodyne;
    c.t = 1.0;
    return c;
  }
  c.type = CircuitType::kDoubleUnbalancedHeterodyne;
  c.t = t;
  c.feasible = t > 0.0 && t < 1.0;
  return c;
}

namespace {

struct InnerSolution {
  MatrixXd z;
  double commutator = 0.0;
  double value = 0.0;
};

// argmin Tr(z A z^T) + lambda z_1^T Omega z_2 subject to C z^T = I.
InnerSolution inner_minimizer(const ProbeModel& model, double lambda) {
  const MatrixXd& a = model.covariance();
  const MatrixXd& c = model.mean_coeffs();
  const MatrixXd omega = symplectic_matrix(model.n_modes());
  const Eigen::Index d = a.rows();
  const Eigen::Index m = 2 * c.rows();

  MatrixXd q(2 * d, 2 * d);
  q << a, 0.5 * lambda * omega, 0.5 * lambda * omega.transpose(), a;
  MatrixXd kkt = MatrixXd::Zero(2 * d + m, 2 * d + m);
  kkt.topLeftCorner(2 * d, 2 * d) = 2.0 * q;
  kkt.block(2 * d, 0, c.rows(), d) = c;
  kkt.block(2 * d + c.rows(), d, c.rows(), d) = c;
  kkt.topRightCorner(2 * d, m) = kkt.bottomLeftCorner(m, 2 * d).transpose();
  VectorXd rhs = VectorXd::Zero(2 * d + m);
  rhs(2 * d) = 1.0;
  rhs(2 * d + c.rows() + 1) = 1.0;

  const Eigen::FullPivLU<MatrixXd> lu(kkt);
  const VectorXd sol = lu.solve(rhs);
  InnerSolution out;
  out.z.resize(2, d);
  out.z.row(0) = sol.head(d).transpose();
  out.z.row(1) = sol.segment(d, d).transpose();
  out.commutator = out.z.row(0).dot(omega * out.z.row(1).transpose());
  out.value = (out.z * a * out.z.transpose()).trace() + lambda * out.commutator;
  return out;
}

}  // namespace

TwoParameterOptimum minimize_two_parameter_plan(const ProbeModel& model) {
  if (model.n_params() != 2) {
    throw InputError("exact plan minimization needs exactly two parameters");
  }
  // g(lambda) is concave with g'(lambda) = commutator of the inner minimizer,
  // which is therefore non-increasing in lambda.
  double lo = -1.0;
  double hi = 1.0;
  InnerSolution best = inner_minimizer(model, hi);
  double lambda = hi;
  if (best.commutator < 0.0) {
    best = inner_minimizer(model, lo);
    lambda = lo;
    // Interior maximizer only if the derivative changes sign on [-1, 1].
    if (best.commutator > 0.0) {
      while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon()) {
        const double mid = 0.5 * (lo + hi);
        const InnerSolution s = inner_minimizer(model, mid);
        if (s.commutator > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
        if (mid == lo && mid == hi) break;
      }
      lambda = 0.5 * (lo + hi);
      best = inner_minimizer(model, lambda);
    }
  }
  TwoParameterOptimum out;
  out.z = best.z;
  out.lambda = lambda;
  out.value = achieved_mse(best.z, model).total;
  return out;
}

MeasurementPlan extract_plan(const ProbeModel& model, const EuclideanFrame& frame,
                             const MatrixXd& f_opt, bool refine) {
  const int d = frame.dim();
  if (f_opt.rows() != d || f_opt.cols() != d) {
    throw InputError("optimizer has the wrong size for the frame");
  }
  const MatrixXd f = 0.5 * (f_opt + f_opt.transpose());
  const MatrixXd fm = f * frame.m_mat.transpose();
  const MatrixXd reduced = frame.m_mat * fm;
  Eigen::LLT<MatrixXd> llt(0.5 * (reduced + reduced.transpose()));
  if (llt.info() != Eigen::Success) {
    throw DegenerateOptimizerError("M F M^T is singular; no unbiased plan");
  }
  MeasurementPlan plan;
  // Z^T = E F M^T (M F M^T)^{-1}
  plan.z = llt.solve(MatrixXd(frame.basis * fm).transpose());
  plan.z_from_optimizer = plan.z;
  if (refine && model.n_params() == 2) {
    const TwoParameterOptimum exact = minimize_two_parameter_plan(model);
    if (exact.value <= achieved_mse(plan.z, model).total + 1e-12) {
      plan.z = exact.z;
      plan.refined = true;
    }
  }
  plan.commutators =
      plan.z * symplectic_matrix(model.n_modes()) * plan.z.transpose();
  plan.mse = achieved_mse(plan.z, model);
  plan.circuit = circuit_params(plan.z);
  return plan;
}

}  // namespace holevo
