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

// Dense primal-dual interior-point solver for small block-diagonal SDPs.
//
// The problem pair is
//
//   primal:  maximize  Tr(C X)   s.t.  Tr(B_j X) = b_j,  X >= 0,
//   dual:    minimize  b^T y     s.t.  sum_j y_j B_j - C >= 0,
//
// where every block of B_j, C and X is Hermitian. Blocks marked complex are
// handled through their real embedding (see realify) with a 1/2 weight, so
// that traces over the embedding equal traces over the complex block. The
// iteration uses the HKM search direction with a Mehrotra predictor-corrector
// step and is fully deterministic.

#ifndef HOLEVO_SDP_HPP_
#define HOLEVO_SDP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "holevo/errors.hpp"
#include "holevo/linalg.hpp"

namespace holevo {

enum class BlockKind { kReal, kComplex };

/// Block-diagonal Hermitian matrix; blocks are stored as complex matrices
/// even when real.
struct BlockMatrix {
  std::vector<MatrixXcd> blocks;

  static BlockMatrix zeros(const std::vector<int>& sizes);
  /// Dense matrix with the blocks placed along the diagonal.
  MatrixXcd dense() const;
  BlockMatrix& operator+=(const BlockMatrix& other);
  BlockMatrix operator-(const BlockMatrix& other) const;
  BlockMatrix operator*(double s) const;
};

/// Re Tr(A B) summed over blocks.
double trace_inner(const BlockMatrix& a, const BlockMatrix& b);

struct SdpProblem {
  VectorXd b;
  std::vector<BlockMatrix> basis_matrices;
  BlockMatrix c_matrix;
  std::vector<int> block_sizes;
  std::vector<BlockKind> block_kinds;

  int num_constraints() const { return static_cast<int>(b.size()); }
  /// sum_j y_j B_j.
  BlockMatrix combine(const VectorXd& y) const;
  /// Throws InputError if shapes are inconsistent or a block is not Hermitian.
  void validate() const;
};

struct SdpSolution {
  VectorXd y;
  BlockMatrix x;
  double primal_value = 0.0;  ///< Tr(C X)
  double dual_value = 0.0;    ///< b^T y
  double gap = 0.0;           ///< dual_value - primal_value
  double primal_infeasibility = 0.0;  ///< max_j |Tr(B_j X) - b_j|
  double dual_infeasibility = 0.0;    ///< max entry of sum y_j B_j - C - Z
  int iterations = 0;
};

struct SolverOptions {
  double tol = 1e-9;
  int max_iterations = 200;
  /// Strictly dual-feasible starting point; an infeasible start is used when
  /// absent.
  std::optional<VectorXd> initial_y;
};

/// Solver ran out of iterations or stalled. Carries the best iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, SdpSolution best)
      : Error(what), best_(std::move(best)) {}
  const SdpSolution& best() const { return best_; }

 private:
  SdpSolution best_;
};

SdpSolution solve(const SdpProblem& problem, const SolverOptions& options = {});

struct CertificateReport {
  double min_eig_x = 0.0;
  double min_eig_slack = 0.0;  ///< smallest eigenvalue of sum y_j B_j - C
  double max_constraint_residual = 0.0;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;
  bool optimal = false;
};

/// Checks primal feasibility, dual feasibility and the duality gap of a
/// candidate pair. The verdict is optimal iff every residual and |gap| are at
/// most `tol`.
CertificateReport verify_certificate(const SdpProblem& problem,
                                     const BlockMatrix& x, const VectorXd& y,
                                     double tol);

}  // namespace holevo

#endif  // HOLEVO_SDP_HPP_
