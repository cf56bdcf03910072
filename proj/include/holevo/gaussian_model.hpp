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

// Gaussian probes whose quadrature means are linear in the unknown
// parameters, and the orthonormal-frame data every bound is computed from.
//
// Conventions used throughout the library:
//   * phase-space coordinates are ordered (y1, x1, y2, x2, ..., yn, xn), where
//     y_k multiplies Q_k and x_k multiplies P_k;
//   * [Q, P] = i, so the vacuum has quadrature variance 1/2.

#ifndef HOLEVO_GAUSSIAN_MODEL_HPP_
#define HOLEVO_GAUSSIAN_MODEL_HPP_

#include <optional>

#include "holevo/linalg.hpp"

namespace holevo {

/// Tolerance on the smallest eigenvalue of A + (i/2)Omega.
inline constexpr double kCovarianceTolerance = 1e-10;

/// Eigenvalues of I + (i/2)D at or below this value are treated as pure
/// (zero-noise) directions of the probe.
inline constexpr double kPureDirectionTolerance = 1e-9;

/// An n-mode Gaussian probe with mean m(z) = sum_j theta_j c_j^T z.
///
/// Construct through `ProbeModel::create`, which validates the covariance and
/// the coefficient rows. Instances are immutable.
class ProbeModel {
 public:
  /// Throws InputError on shape problems, InvalidStateError when A is not a
  /// quantum covariance and UnidentifiableParameterError when the coefficient
  /// rows are linearly dependent.
  static ProbeModel create(MatrixXd covariance, MatrixXd mean_coeffs);

  int n_modes() const { return static_cast<int>(covariance_.rows() / 2); }
  int n_params() const { return static_cast<int>(mean_coeffs_.rows()); }
  const MatrixXd& covariance() const { return covariance_; }
  const MatrixXd& mean_coeffs() const { return mean_coeffs_; }

  /// alpha(z, z') = z^T A z'.
  double correlation(const VectorXd& z, const VectorXd& z_prime) const;

 private:
  ProbeModel(MatrixXd covariance, MatrixXd mean_coeffs)
      : covariance_(std::move(covariance)),
        mean_coeffs_(std::move(mean_coeffs)) {}

  MatrixXd covariance_;
  MatrixXd mean_coeffs_;
};

/// Smallest eigenvalue of A + (i/2)Omega. Non-negative for physical states.
double quantum_covariance_margin(const MatrixXd& covariance);

/// Delta(z, z') = z^T Omega z' = sum_j (x'_j y_j - x_j y'_j).
double symplectic_form(const VectorXd& z, const VectorXd& z_prime);

/// The symmetric two-mode squeezed thermal probe after the decoupling 50:50
/// beam splitter, with one mode displaced by (theta1, theta2).
///
/// A = v diag(e^{-2r}, e^{2r}, e^{2r}, e^{-2r}); coefficient rows
/// (1, 0, -1, 0)/sqrt(2) and (0, 1, 0, -1)/sqrt(2).
ProbeModel symmetric_tmst_probe(double v, double r);

/// The vector representing c^T z in the alpha inner product: A^{-1} c.
VectorXd riesz_vector(const VectorXd& coeff, const ProbeModel& model);

/// Orthonormal-basis representation of a probe.
struct EuclideanFrame {
  MatrixXd basis;   ///< E; column k is e_k in phase-space coordinates.
  MatrixXd m_mat;   ///< M_{jk} = alpha(m_j, e_k)  (l x 2n).
  MatrixXd d_mat;   ///< D_{jk} = alpha(e_j, D e_k) = (E^T Omega E)_{jk}.
  MatrixXcd t_mat;  ///< I + (i/2) D.
  /// (I + (i/2) D)^{-1}. When the probe has pure directions this is the
  /// inverse on the range of t_mat (the matrix itself is unbounded there).
  MatrixXcd c_mat;
  /// Orthonormal eigenvectors of t_mat with non-zero eigenvalue, and those
  /// eigenvalues. Spans the whole space unless the probe has pure directions.
  MatrixXcd range_basis;
  VectorXd range_eigenvalues;

  int dim() const { return static_cast<int>(basis.rows()); }
  int n_params() const { return static_cast<int>(m_mat.rows()); }
  /// Number of eigenvalues of t_mat that vanish.
  int pure_directions() const {
    return dim() - static_cast<int>(range_basis.cols());
  }
  bool has_pure_directions() const { return pure_directions() > 0; }
};

/// Builds the frame from the Cholesky factor A = L L^T, E = L^{-T}, or from a
/// caller-supplied basis that must be alpha-orthonormal (E^T A E = I).
EuclideanFrame orthonormal_frame(const ProbeModel& model,
                                 const std::optional<MatrixXd>& basis_override =
                                     std::nullopt);

/// The diagonal basis e_k used for the symmetric TMST probe:
/// diag(e^r, e^{-r}, e^{-r}, e^r) / sqrt(v).
MatrixXd tmst_diagonal_basis(double v, double r);

/// Var(Q1 - Q2) + Var(P1 + P2) of the two-mode squeezed thermal probe before
/// the decoupling beam splitter: 4 v e^{-2r}.
double duan_sum(double v, double r);

/// r0 = log(2v)/2, the squeezing above which the probe is entangled.
double entanglement_threshold(double v);

/// Duan's criterion with bound 2; equivalent to r > r0.
bool is_entangled(double v, double r);

}  // namespace holevo

#endif  // HOLEVO_GAUSSIAN_MODEL_HPP_
