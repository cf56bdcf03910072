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

#include "holevo/holevo_sdp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace holevo {

std::vector<MatrixXd> symmetric_basis(int d) {
  std::vector<MatrixXd> basis;
  basis.reserve(static_cast<size_t>(d * (d + 1) / 2));
  for (int k = 0; k < d; ++k) {
    MatrixXd e = MatrixXd::Zero(d, d);
    e(k, k) = 1.0;
    basis.push_back(std::move(e));
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      MatrixXd e = MatrixXd::Zero(d, d);
      e(i, j) = 1.0;
      e(j, i) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

VectorXd symmetric_coordinates(const MatrixXd& s) {
  const Eigen::Index d = s.rows();
  VectorXd out(d * (d + 1) / 2);
  Eigen::Index pos = 0;
  for (Eigen::Index k = 0; k < d; ++k) out(pos++) = s(k, k);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) out(pos++) = 0.5 * (s(i, j) + s(j, i));
  }
  return out;
}

MatrixXd from_symmetric_coordinates(const VectorXd& coords, int d) {
  if (coords.size() != d * (d + 1) / 2) {
    throw InputError("from_symmetric_coordinates: wrong number of coordinates");
  }
  MatrixXd s = MatrixXd::Zero(d, d);
  Eigen::Index pos = 0;
  for (int k = 0; k < d; ++k) s(k, k) = coords(pos++);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      s(i, j) = coords(pos);
      s(j, i) = coords(pos);
      ++pos;
    }
  }
  return s;
}

namespace {

// The upper-constraint block as it enters the SDP: the optimizer variable
// (projected on the range of I + (i/2)D if needed), and the bound it must not
// exceed.
MatrixXcd project_upper(const EuclideanFrame& frame, const MatrixXd& f) {
  if (!frame.has_pure_directions()) return f.cast<Complex>();
  return frame.range_basis.adjoint() * f.cast<Complex>() * frame.range_basis;
}

MatrixXcd upper_bound_matrix(const EuclideanFrame& frame) {
  if (!frame.has_pure_directions()) return frame.c_mat;
  return frame.range_eigenvalues.cwiseInverse().cast<Complex>().asDiagonal();
}

}  // namespace

SdpProblem build_sdp(const EuclideanFrame& frame) {
  const int d = frame.dim();
  const int l = frame.n_params();
  const auto f_basis = symmetric_basis(d);
  const auto h_basis = symmetric_basis(l);
  const MatrixXcd upper = upper_bound_matrix(frame);
  const int upper_dim = static_cast<int>(upper.rows());

  SdpProblem p;
  p.block_sizes = {2 * l, d, upper_dim};
  p.block_kinds = {BlockKind::kReal, BlockKind::kReal, BlockKind::kComplex};
  p.b = VectorXd::Zero(static_cast<Eigen::Index>(f_basis.size() + h_basis.size()));

  for (const auto& fa : f_basis) {
    BlockMatrix bj = BlockMatrix::zeros(p.block_sizes);
    bj.blocks[0].bottomRightCorner(l, l) =
        (frame.m_mat * fa * frame.m_mat.transpose()).cast<Complex>();
    bj.blocks[1] = fa.cast<Complex>();
    bj.blocks[2] = -project_upper(frame, fa);
    p.basis_matrices.push_back(std::move(bj));
  }
  for (size_t k = 0; k < h_basis.size(); ++k) {
    BlockMatrix bj = BlockMatrix::zeros(p.block_sizes);
    bj.blocks[0].topLeftCorner(l, l) = h_basis[k].cast<Complex>();
    p.basis_matrices.push_back(std::move(bj));
    // Tr H picks the diagonal coordinates of H.
    if (static_cast<int>(k) < l) p.b(static_cast<Eigen::Index>(f_basis.size() + k)) = 1.0;
  }

  p.c_matrix = BlockMatrix::zeros(p.block_sizes);
  p.c_matrix.blocks[0].topRightCorner(l, l) = -MatrixXcd::Identity(l, l);
  p.c_matrix.blocks[0].bottomLeftCorner(l, l) = -MatrixXcd::Identity(l, l);
  p.c_matrix.blocks[2] = -upper;
  return p;
}

VectorXd feasible_dual_start(const EuclideanFrame& frame) {
  const int d = frame.dim();
  const int l = frame.n_params();
  const double s = 0.5 * min_eigenvalue(upper_bound_matrix(frame));
  const MatrixXd f = s * MatrixXd::Identity(d, d);
  const MatrixXd reduced = frame.m_mat * f * frame.m_mat.transpose();
  const VectorXd eig = symmetric_eigenvalues(reduced);
  if (eig(0) <= 0.0) {
    throw UnidentifiableParameterError("M M^T is singular");
  }
  const double h = 2.0 / eig(0) + 1.0;
  VectorXd y(d * (d + 1) / 2 + l * (l + 1) / 2);
  y << symmetric_coordinates(f),
      symmetric_coordinates(h * MatrixXd::Identity(l, l));
  return y;
}

OptimizerMargins optimizer_margins(const EuclideanFrame& frame,
                                   const MatrixXd& f) {
  const MatrixXd fs = 0.5 * (f + f.transpose());
  OptimizerMargins m;
  m.lower = min_eigenvalue(fs);
  const MatrixXcd diff = upper_bound_matrix(frame) - project_upper(frame, fs);
  m.upper = min_eigenvalue(MatrixXcd(0.5 * (diff + diff.adjoint())));
  return m;
}

BoundResult holevo_bound(const EuclideanFrame& frame, double tol) {
  const int d = frame.dim();
  BoundResult result;
  result.problem = build_sdp(frame);
  SolverOptions options;
  options.tol = tol;
  options.initial_y = feasible_dual_start(frame);
  result.solution = solve(result.problem, options);

  result.sigma_star = result.solution.dual_value;
  // Solver tolerances are relative to the objective; so are these checks.
  const double scale = std::max(1.0, std::abs(result.sigma_star));
  result.f_opt = from_symmetric_coordinates(
      result.solution.y.head(d * (d + 1) / 2), d);
  result.f_reduced = frame.m_mat * result.f_opt * frame.m_mat.transpose();
  result.report = verify_certificate(result.problem, result.solution.x,
                                     result.solution.y, 10.0 * tol * scale);
  result.margins = optimizer_margins(frame, result.f_opt);

  const double feasibility_tol = std::max(1e-8, 10.0 * tol);
  if (result.margins.lower < -feasibility_tol ||
      result.margins.upper < -feasibility_tol) {
    throw NumericalError("recovered optimizer violates 0 <= F <= C (margins " +
                         std::to_string(result.margins.lower) + ", " +
                         std::to_string(result.margins.upper) + ")");
  }
  Eigen::LLT<MatrixXd> llt(result.f_reduced);
  if (llt.info() != Eigen::Success) {
    throw DegenerateOptimizerError("M F* M^T is not positive definite");
  }
  const int l = frame.n_params();
  const double trace_inv = llt.solve(MatrixXd::Identity(l, l)).trace();
  if (std::abs(trace_inv - result.sigma_star) > std::max(1e-7, 100.0 * tol) * scale) {
    throw NumericalError("Tr (F*)^{-1} = " + std::to_string(trace_inv) +
                         " disagrees with the dual value " +
                         std::to_string(result.sigma_star));
  }
  return result;
}

}  // namespace holevo
