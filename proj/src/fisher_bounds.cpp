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

#include "holevo/fisher_bounds.hpp"

#include <iostream>

#include "holevo/errors.hpp"

namespace holevo {

namespace {

constexpr double kConditionWarning = 1e12;

void warn_if_ill_conditioned(const VectorXd& eigs, const char* what) {
  if (eigs.size() == 0) return;
  const double lo = eigs.cwiseAbs().minCoeff();
  const double hi = eigs.cwiseAbs().maxCoeff();
  if (lo == 0.0 || hi / lo > kConditionWarning) {
    std::clog << "warning: " << what << " is ill-conditioned (cond "
              << (lo == 0.0 ? 0.0 : hi / lo) << ")\n";
  }
}

MatrixXcd solve_hermitian_inverse(const MatrixXcd& g, const char* what) {
  const Eigen::Index l = g.rows();
  const MatrixXcd sym = 0.5 * (g + g.adjoint());
  Eigen::LLT<MatrixXcd> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw UnidentifiableParameterError(std::string(what) +
                                       " is not positive definite");
  }
  warn_if_ill_conditioned(hermitian_eigenvalues(sym), what);
  MatrixXcd inv = llt.solve(MatrixXcd::Identity(l, l));
  return 0.5 * (inv + inv.adjoint());
}

double rld_value(const MatrixXcd& inverse) {
  const MatrixXd im = inverse.imag();
  return inverse.real().trace() + trabs(MatrixXd(0.5 * (im - im.transpose())));
}

}  // namespace

SldBound sld_bound(const EuclideanFrame& frame) {
  const MatrixXd g = frame.m_mat * frame.m_mat.transpose();
  const Eigen::Index l = g.rows();
  Eigen::LLT<MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) {
    throw UnidentifiableParameterError("SLD Fisher matrix is singular");
  }
  warn_if_ill_conditioned(symmetric_eigenvalues(g), "SLD Fisher matrix");
  const MatrixXd inv = llt.solve(MatrixXd::Identity(l, l));
  return {g, inv.trace()};
}

RldBound rld_bound(const EuclideanFrame& frame) {
  const Eigen::Index l = frame.m_mat.rows();
  const MatrixXcd m = frame.m_mat.cast<Complex>();
  RldBound out;
  if (!frame.has_pure_directions()) {
    MatrixXcd g = m * frame.c_mat * m.adjoint();
    g = 0.5 * (g + g.adjoint()).eval();
    out.inverse = solve_hermitian_inverse(g, "RLD Fisher matrix");
    out.fisher = std::move(g);
    out.bound = rld_value(out.inverse);
    return out;
  }

  // Pure directions: G^(R) = M_R L^{-1} M_R^* + (1/eps) M_N M_N^* as eps -> 0.
  // The inverse tends to W (W^* G_R W)^{-1} W^* with W spanning ker(M_N^*).
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(frame.t_mat);
  const Eigen::Index nullity = frame.pure_directions();
  const MatrixXcd null_basis = eig.eigenvectors().leftCols(nullity);
  const MatrixXcd m_null = m * null_basis;
  const MatrixXcd m_range = m * frame.range_basis;
  const MatrixXcd g_range =
      m_range *
      frame.range_eigenvalues.cwiseInverse().cast<Complex>().asDiagonal() *
      m_range.adjoint();

  Eigen::JacobiSVD<MatrixXcd> svd(m_null, Eigen::ComputeFullU);
  const VectorXd& sv = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;

  if (rank == 0) {
    // Parameters do not touch the pure directions; G^(R) is finite.
    MatrixXcd g = 0.5 * (g_range + g_range.adjoint());
    out.inverse = solve_hermitian_inverse(g, "RLD Fisher matrix");
    out.fisher = std::move(g);
  } else if (rank == l) {
    out.inverse = MatrixXcd::Zero(l, l);
  } else {
    const MatrixXcd w = svd.matrixU().rightCols(l - rank);
    const MatrixXcd reduced = w.adjoint() * g_range * w;
    out.inverse = w * solve_hermitian_inverse(reduced, "RLD Fisher matrix") *
                  w.adjoint();
  }
  out.bound = rld_value(out.inverse);
  return out;
}

FisherResult fisher_bounds(const EuclideanFrame& frame) {
  SldBound sld = sld_bound(frame);
  RldBound rld = rld_bound(frame);
  FisherResult out;
  out.g_sld = std::move(sld.fisher);
  out.c_sld = sld.bound;
  out.g_rld = std::move(rld.fisher);
  out.g_rld_inverse = std::move(rld.inverse);
  out.c_rld = rld.bound;
  return out;
}

}  // namespace holevo
