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

#include "holevo/linalg.hpp"

#include <cmath>

#include "holevo/errors.hpp"

namespace holevo {

MatrixXd symplectic_matrix(int n_modes) {
  if (n_modes < 0) throw InputError("symplectic_matrix: negative mode count");
  MatrixXd omega = MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

bool is_hermitian(const MatrixXcd& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return max_abs(MatrixXcd(h - h.adjoint())) <= tol;
}

MatrixXd realify(const MatrixXcd& hermitian) {
  const double scale = std::max(1.0, max_abs(hermitian));
  if (!is_hermitian(hermitian, 1e-12 * scale)) {
    throw InputError("realify: matrix is not Hermitian");
  }
  const Eigen::Index d = hermitian.rows();
  MatrixXd out(2 * d, 2 * d);
  const MatrixXd re = hermitian.real();
  const MatrixXd im = hermitian.imag();
  out.topLeftCorner(d, d) = re;
  out.topRightCorner(d, d) = -im;
  out.bottomLeftCorner(d, d) = im;
  out.bottomRightCorner(d, d) = re;
  return out;
}

MatrixXcd unrealify(const MatrixXd& embedded) {
  if (embedded.rows() != embedded.cols() || embedded.rows() % 2 != 0) {
    throw InputError("unrealify: expected a square matrix of even size");
  }
  const Eigen::Index d = embedded.rows() / 2;
  const MatrixXd re =
      0.5 * (embedded.topLeftCorner(d, d) + embedded.bottomRightCorner(d, d));
  const MatrixXd im =
      0.5 * (embedded.bottomLeftCorner(d, d) - embedded.topRightCorner(d, d));
  MatrixXcd out(d, d);
  out.real() = re;
  out.imag() = im;
  return out;
}

double trabs(const MatrixXcd& m) {
  if (m.rows() != m.cols()) throw InputError("trabs: matrix is not square");
  if (m.size() == 0) return 0.0;
  const double scale = std::max(1.0, max_abs(m));
  if (is_hermitian(m, 1e-13 * scale)) {
    return hermitian_eigenvalues(0.5 * (m + m.adjoint())).cwiseAbs().sum();
  }
  // Anti-Hermitian input (real antisymmetric included): -iM is Hermitian with
  // eigenvalues of the same modulus.
  if (max_abs(MatrixXcd(m + m.adjoint())) <= 1e-13 * scale) {
    const MatrixXcd h = Complex(0.0, -1.0) * m;
    return hermitian_eigenvalues(0.5 * (h + h.adjoint())).cwiseAbs().sum();
  }
  Eigen::ComplexEigenSolver<MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("trabs: eigenvalue computation failed");
  }
  return solver.eigenvalues().cwiseAbs().sum();
}

double trabs(const MatrixXd& m) { return trabs(MatrixXcd(m.cast<Complex>())); }

VectorXd hermitian_eigenvalues(const MatrixXcd& h) {
  if (h.size() == 0) return VectorXd();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: solver failed");
  }
  return solver.eigenvalues();
}

VectorXd symmetric_eigenvalues(const MatrixXd& s) {
  if (s.size() == 0) return VectorXd();
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric_eigenvalues: solver failed");
  }
  return solver.eigenvalues();
}

double min_eigenvalue(const MatrixXcd& h) {
  const VectorXd eigs = hermitian_eigenvalues(h);
  return eigs.size() == 0 ? 0.0 : eigs(0);
}

double min_eigenvalue(const MatrixXd& s) {
  const VectorXd eigs = symmetric_eigenvalues(s);
  return eigs.size() == 0 ? 0.0 : eigs(0);
}

double max_abs(const MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace holevo
