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

#include "holevo/gaussian_model.hpp"

#include <cmath>
#include <string>

#include "holevo/errors.hpp"

namespace holevo {

namespace {

void check_state_parameters(double v, double r) {
  if (!std::isfinite(v) || !std::isfinite(r)) {
    throw InputError("probe parameters must be finite");
  }
  if (v < 0.5) {
    throw InvalidStateError("thermal variance v = " + std::to_string(v) +
                            " is below the vacuum variance 1/2");
  }
  if (r < 0.0) throw InputError("squeezing r must be non-negative");
}

}  // namespace

double quantum_covariance_margin(const MatrixXd& covariance) {
  const int n_modes = static_cast<int>(covariance.rows() / 2);
  MatrixXcd h = covariance.cast<Complex>();
  h += Complex(0.0, 0.5) * symplectic_matrix(n_modes).cast<Complex>();
  return min_eigenvalue(h);
}

ProbeModel ProbeModel::create(MatrixXd covariance, MatrixXd mean_coeffs) {
  const Eigen::Index d = covariance.rows();
  if (d == 0 || d != covariance.cols() || d % 2 != 0) {
    throw InputError("covariance must be a non-empty square matrix of even size");
  }
  if (mean_coeffs.rows() == 0 || mean_coeffs.cols() != d) {
    throw InputError("mean_coeffs must have one row per parameter and 2n columns");
  }
  if (!covariance.allFinite() || !mean_coeffs.allFinite()) {
    throw InputError("probe data contains non-finite entries");
  }
  const double scale = std::max(1.0, max_abs(covariance));
  if (max_abs(MatrixXd(covariance - covariance.transpose())) > 1e-12 * scale) {
    throw InputError("covariance is not symmetric");
  }
  covariance = 0.5 * (covariance + covariance.transpose()).eval();

  const double margin = quantum_covariance_margin(covariance);
  if (margin < -kCovarianceTolerance) {
    throw InvalidStateError(
        "covariance violates A + (i/2)Omega >= 0 (smallest eigenvalue " +
        std::to_string(margin) + ")");
  }

  if (mean_coeffs.rows() > d) {
    throw UnidentifiableParameterError(
        "more parameters than phase-space dimensions");
  }
  Eigen::JacobiSVD<MatrixXd> svd(mean_coeffs);
  const VectorXd& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * std::max(sv(0), 1e-300)) {
    throw UnidentifiableParameterError(
        "mean_coeffs does not have full row rank");
  }
  return ProbeModel(std::move(covariance), std::move(mean_coeffs));
}

double ProbeModel::correlation(const VectorXd& z, const VectorXd& z_prime) const {
  if (z.size() != covariance_.rows() || z_prime.size() != covariance_.rows()) {
    throw InputError("correlation: vector dimension does not match the probe");
  }
  return z.dot(covariance_ * z_prime);
}

double symplectic_form(const VectorXd& z, const VectorXd& z_prime) {
  if (z.size() != z_prime.size()) {
    throw InputError("symplectic_form: dimension mismatch");
  }
  if (z.size() % 2 != 0) {
    throw InputError("symplectic_form: coordinate vectors must have even length");
  }
  double sum = 0.0;
  for (Eigen::Index k = 0; k < z.size(); k += 2) {
    sum += z_prime(k + 1) * z(k) - z(k + 1) * z_prime(k);
  }
  return sum;
}

ProbeModel symmetric_tmst_probe(double v, double r) {
  check_state_parameters(v, r);
  const double lo = v * std::exp(-2.0 * r);
  const double hi = v * std::exp(2.0 * r);
  MatrixXd a = VectorXd((VectorXd(4) << lo, hi, hi, lo).finished()).asDiagonal();
  const double s = 1.0 / std::sqrt(2.0);
  MatrixXd c(2, 4);
  c << s, 0.0, -s, 0.0,  //
      0.0, s, 0.0, -s;
  return ProbeModel::create(std::move(a), std::move(c));
}

VectorXd riesz_vector(const VectorXd& coeff, const ProbeModel& model) {
  if (coeff.size() != model.covariance().rows()) {
    throw InputError("riesz_vector: coefficient dimension does not match the probe");
  }
  Eigen::LDLT<MatrixXd> ldlt(model.covariance());
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw NumericalError("riesz_vector: covariance is singular");
  }
  return ldlt.solve(coeff);
}

MatrixXd tmst_diagonal_basis(double v, double r) {
  check_state_parameters(v, r);
  const double up = std::exp(r) / std::sqrt(v);
  const double down = std::exp(-r) / std::sqrt(v);
  return VectorXd((VectorXd(4) << up, down, down, up).finished()).asDiagonal();
}

EuclideanFrame orthonormal_frame(const ProbeModel& model,
                                 const std::optional<MatrixXd>& basis_override) {
  const MatrixXd& a = model.covariance();
  const Eigen::Index d = a.rows();
  EuclideanFrame frame;
  if (basis_override) {
    if (basis_override->rows() != d || basis_override->cols() != d) {
      throw InputError("basis override has the wrong shape");
    }
    const MatrixXd gram = basis_override->transpose() * a * *basis_override;
    if (max_abs(MatrixXd(gram - MatrixXd::Identity(d, d))) > 1e-12) {
      throw InputError("basis override is not orthonormal in the alpha inner product");
    }
    frame.basis = *basis_override;
  } else {
    Eigen::LLT<MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) {
      throw InvalidStateError("covariance is not positive definite");
    }
    const MatrixXd l = llt.matrixL();
    // E = L^{-T}
    frame.basis = l.transpose().triangularView<Eigen::Upper>().solve(
        MatrixXd::Identity(d, d));
  }

  const MatrixXd omega = symplectic_matrix(model.n_modes());
  frame.m_mat = model.mean_coeffs() * frame.basis;
  const MatrixXd d_raw = frame.basis.transpose() * omega * frame.basis;
  frame.d_mat = 0.5 * (d_raw - d_raw.transpose());

  frame.t_mat = MatrixXcd::Identity(d, d);
  frame.t_mat += Complex(0.0, 0.5) * frame.d_mat.cast<Complex>();

  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(frame.t_mat);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of I + (i/2)D failed");
  }
  const VectorXd& lambda = eig.eigenvalues();
  if (lambda(0) < -kPureDirectionTolerance) {
    throw InvalidStateError("I + (i/2)D is not positive semidefinite");
  }
  Eigen::Index first = 0;
  while (first < d && lambda(first) <= kPureDirectionTolerance) ++first;
  const Eigen::Index rank = d - first;
  if (rank == 0) {
    throw InvalidStateError("I + (i/2)D vanishes identically");
  }
  frame.range_basis = eig.eigenvectors().rightCols(rank);
  frame.range_eigenvalues = lambda.tail(rank);

  if (rank == d) {
    frame.c_mat = frame.t_mat.inverse();
    frame.c_mat = 0.5 * (frame.c_mat + frame.c_mat.adjoint()).eval();
  } else {
    frame.c_mat = frame.range_basis *
                  frame.range_eigenvalues.cwiseInverse().cast<Complex>().asDiagonal() *
                  frame.range_basis.adjoint();
  }
  return frame;
}

double duan_sum(double v, double r) {
  check_state_parameters(v, r);
  return 4.0 * v * std::exp(-2.0 * r);
}

double entanglement_threshold(double v) {
  check_state_parameters(v, 0.0);
  return 0.5 * std::log(2.0 * v);
}

bool is_entangled(double v, double r) {
  check_state_parameters(v, r);
  return r > entanglement_threshold(v);
}

}  // namespace holevo
