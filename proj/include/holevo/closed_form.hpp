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

// Analytic solution for the symmetric two-mode squeezed thermal probe with
// displacement on one mode: the bound, the optimizer family, explicit
// primal/dual certificates and their spectra.
//
// Everything here is expressed in the diagonal basis returned by
// tmst_diagonal_basis, so certificates must be checked against
// build_sdp(closed_form_frame(v, r)).

#ifndef HOLEVO_CLOSED_FORM_HPP_
#define HOLEVO_CLOSED_FORM_HPP_

#include <optional>

#include "holevo/gaussian_model.hpp"
#include "holevo/sdp.hpp"

namespace holevo {

enum class Regime { kBelowThreshold, kAtOrAboveThreshold };

const char* regime_name(Regime regime);

/// Below threshold iff r < r0 = log(2v)/2. r = r0 counts as at-or-above.
Regime regime_of(double v, double r);

/// (4v^2 - 1)/(2v cosh 2r - 1) for r < r0, 4v e^{-2r} otherwise.
double holevo_bound_closed(double v, double r);

/// Largest admissible c0: v/(2v cosh 2r - 1) - 2v/(4v^2 - 1) below threshold,
/// 0 otherwise.
double c0_upper(double v, double r);

/// (2v e^{2r} - 1)/(4v cosh 2r - 2). Exceeds 1 above threshold; NaN for the
/// vacuum (v = 1/2, r = 0) where it is 0/0.
double heterodyne_transmission(double v, double r);

/// Optimal F in the diagonal basis. Below threshold this is the c0 family
/// with diagonal (c1, c2, c2, c1) and -c0 couplings between modes; above it
/// is diag(1, 0, 0, 1) and c0 must be 0. Throws InputError otherwise.
MatrixXd optimal_F_closed(double v, double r, double c0 = 0.0);

/// The frame the closed forms are written in.
EuclideanFrame closed_form_frame(double v, double r);

struct Certificate {
  VectorXd y;    ///< 13 dual coordinates
  BlockMatrix x; ///< primal matrix, blocks [4 real, 4 real, 4 complex]
};

/// Explicit optimal primal/dual pair. Requires v > 1/2: at v = 1/2 the
/// upper bound C is unbounded and no finite certificate exists.
Certificate certificate_closed(double v, double r, double c0 = 0.0);

/// Spectra of sum y_j B_j - C and of X for the closed-form certificate, both
/// computed numerically and evaluated from the analytic expressions. Every
/// list has 12 entries in ascending order; zeros are explicit.
struct CertificateSpectra {
  VectorXd slack_numeric;
  VectorXd slack_closed;
  VectorXd x_numeric;
  VectorXd x_closed;
};
CertificateSpectra certificate_eigenvalues(double v, double r, double c0 = 0.0);

struct ClosedFormSolution {
  double v = 0.0;
  double r = 0.0;
  double r0 = 0.0;
  Regime regime = Regime::kBelowThreshold;
  double sigma_star = 0.0;
  double c0 = 0.0;
  MatrixXd f_opt;
  std::optional<double> t;  ///< only below threshold
  std::optional<Certificate> certificate;  ///< absent for v = 1/2
};

ClosedFormSolution solve_closed(double v, double r, double c0 = 0.0);

}  // namespace holevo

#endif  // HOLEVO_CLOSED_FORM_HPP_
