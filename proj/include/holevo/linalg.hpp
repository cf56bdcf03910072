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

// Small dense linear-algebra helpers shared by the bound computations.

#ifndef HOLEVO_LINALG_HPP_
#define HOLEVO_LINALG_HPP_

#include <complex>

#include <Eigen/Dense>

namespace holevo {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// Symplectic matrix for `n_modes` modes in (y1, x1, y2, x2, ...) ordering:
/// block diagonal with [[0, 1], [-1, 0]] per mode.
MatrixXd symplectic_matrix(int n_modes);

/// Real embedding of a complex Hermitian matrix,
/// [[Re H, -Im H], [Im H, Re H]].
///
/// H is PSD iff the embedding is PSD, and every eigenvalue of H appears twice
/// in the spectrum of the embedding. Throws InputError if H is not Hermitian.
MatrixXd realify(const MatrixXcd& hermitian);

/// Inverse of realify for matrices with the embedding's block pattern. General
/// symmetric input is projected onto that pattern first.
MatrixXcd unrealify(const MatrixXd& embedded);

/// Sum of the absolute values of the eigenvalues.
double trabs(const MatrixXcd& m);
double trabs(const MatrixXd& m);

/// Eigenvalues (ascending) of a Hermitian matrix.
VectorXd hermitian_eigenvalues(const MatrixXcd& h);
VectorXd symmetric_eigenvalues(const MatrixXd& s);

double min_eigenvalue(const MatrixXcd& h);
double min_eigenvalue(const MatrixXd& s);

bool is_hermitian(const MatrixXcd& h, double tol);

/// Largest absolute entry.
double max_abs(const MatrixXd& m);
double max_abs(const MatrixXcd& m);

}  // namespace holevo

#endif  // HOLEVO_LINALG_HPP_
