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

// The Holevo bound for Gaussian mean estimation as a semidefinite program.
//
//   Sigma* = min Tr[(M F M^T)^{-1}]  over real symmetric F,  0 <= F <= C,
//
// lifted with an auxiliary l x l matrix H >= (M F M^T)^{-1} (Schur complement)
// into the dual-form SDP  min b^T y  s.t.  sum_j y_j B_j >= C  with
//
//   B_j = [[Hb_j, 0], [0, M Fa_j M^T]] (+) Fa_j (+) -Fa_j,
//   C   = [[0, -I], [-I, 0]] (+) 0 (+) -C.
//
// y is ordered as the coordinates of F in the symmetric basis Fa_j (diagonal
// entries first, then upper off-diagonal pairs in row-major order) followed by
// the coordinates of H in the same kind of basis Hb_j.

#ifndef HOLEVO_HOLEVO_SDP_HPP_
#define HOLEVO_HOLEVO_SDP_HPP_

#include <vector>

#include "holevo/gaussian_model.hpp"
#include "holevo/sdp.hpp"

namespace holevo {

inline constexpr double kDefaultSolverTolerance = 1e-9;

/// Basis of d x d real symmetric matrices: E_kk for k = 0..d-1, then
/// E_ij + E_ji for i < j in row-major order.
std::vector<MatrixXd> symmetric_basis(int d);

/// Coordinates of a symmetric matrix in symmetric_basis, and back.
VectorXd symmetric_coordinates(const MatrixXd& s);
MatrixXd from_symmetric_coordinates(const VectorXd& coords, int d);

/// Builds the SDP. Block sizes are [2l, 2n, 2n] with the last block complex.
///
/// When the probe has pure directions, C is unbounded; the constraint
/// F <= C then only acts on the range of I + (i/2)D and the last block is
/// written in that range (block size = rank).
SdpProblem build_sdp(const EuclideanFrame& frame);

/// Strictly dual-feasible y: F = s I with s half the smallest eigenvalue of
/// C, and H a multiple of I dominating (M F M^T)^{-1}.
VectorXd feasible_dual_start(const EuclideanFrame& frame);

/// min( lambda_min(F), lambda_min(C - F) ); the second term is evaluated on
/// the range of I + (i/2)D when the probe has pure directions.
struct OptimizerMargins {
  double lower = 0.0;  ///< lambda_min(F)
  double upper = 0.0;  ///< lambda_min(C - F) (complex ordering)
};
OptimizerMargins optimizer_margins(const EuclideanFrame& frame,
                                   const MatrixXd& f);

struct BoundResult {
  double sigma_star = 0.0;
  MatrixXd f_opt;      ///< optimal F in the e-basis (2n x 2n)
  MatrixXd f_reduced;  ///< M F M^T (l x l)
  SdpProblem problem;
  SdpSolution solution;
  CertificateReport report;
  OptimizerMargins margins;
};

/// Solves the SDP for the frame and recovers the optimizer from the F
/// coordinates of y. Throws ConvergenceError on solver failure and
/// NumericalError if the recovered optimizer violates 0 <= F <= C or
/// Tr (F*)^{-1} != Sigma* beyond tolerance.
BoundResult holevo_bound(const EuclideanFrame& frame,
                         double tol = kDefaultSolverTolerance);

}  // namespace holevo

#endif  // HOLEVO_HOLEVO_SDP_HPP_
