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

#include "holevo/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "holevo/holevo_sdp.hpp"

namespace holevo {

namespace {

constexpr double kRangeSlack = 1e-12;

void check_state(double v, double r) {
  if (!(v >= 0.5)) throw InputError("v must be at least 1/2");
  if (!(r >= 0.0)) throw InputError("r must be non-negative");
  if (!std::isfinite(v) || !std::isfinite(r)) {
    throw InputError("v and r must be finite");
  }
}

void check_c0(double v, double r, double c0) {
  const double hi = c0_upper(v, r);
  if (!(c0 >= -kRangeSlack && c0 <= hi + kRangeSlack)) {
    throw InputError("c0 = " + std::to_string(c0) +
                     " outside the admissible range [0, " + std::to_string(hi) +
                     "]");
  }
}

// Ascending, padded with zeros up to `size`.
VectorXd padded(std::vector<double> values, int size) {
  values.resize(static_cast<size_t>(size), 0.0);
  std::sort(values.begin(), values.end());
  return Eigen::Map<VectorXd>(values.data(), size);
}

VectorXd block_spectrum(const BlockMatrix& m) {
  std::vector<double> all;
  for (const auto& blk : m.blocks) {
    const VectorXd e = hermitian_eigenvalues(MatrixXcd(0.5 * (blk + blk.adjoint())));
    all.insert(all.end(), e.data(), e.data() + e.size());
  }
  return padded(std::move(all), static_cast<int>(all.size()));
}

}  // namespace

const char* regime_name(Regime regime) {
  return regime == Regime::kBelowThreshold ? "below_threshold"
                                           : "at_or_above_threshold";
}

Regime regime_of(double v, double r) {
  check_state(v, r);
  return r < entanglement_threshold(v) ? Regime::kBelowThreshold
                                       : Regime::kAtOrAboveThreshold;
}

double holevo_bound_closed(double v, double r) {
  if (regime_of(v, r) == Regime::kBelowThreshold) {
    return (4.0 * v * v - 1.0) / (2.0 * v * std::cosh(2.0 * r) - 1.0);
  }
  return 4.0 * v * std::exp(-2.0 * r);
}

double c0_upper(double v, double r) {
  if (regime_of(v, r) == Regime::kAtOrAboveThreshold) return 0.0;
  return v / (2.0 * v * std::cosh(2.0 * r) - 1.0) - 2.0 * v / (4.0 * v * v - 1.0);
}

double heterodyne_transmission(double v, double r) {
  check_state(v, r);
  const double den = 4.0 * v * std::cosh(2.0 * r) - 2.0;
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (2.0 * v * std::exp(2.0 * r) - 1.0) / den;
}

MatrixXd optimal_F_closed(double v, double r, double c0) {
  check_c0(v, r, c0);
  MatrixXd f = MatrixXd::Zero(4, 4);
  if (regime_of(v, r) == Regime::kAtOrAboveThreshold) {
    f(0, 0) = 1.0;
    f(3, 3) = 1.0;
    return f;
  }
  const double k = 2.0 * v / (4.0 * v * v - 1.0);
  const double ep = std::exp(2.0 * r);
  const double em = std::exp(-2.0 * r);
  const double c1 = k * (2.0 * v - em) - em * c0;
  const double c2 = k * (2.0 * v - ep) - ep * c0;
  f(0, 0) = f(3, 3) = c1;
  f(1, 1) = f(2, 2) = c2;
  f(0, 2) = f(2, 0) = -c0;
  f(1, 3) = f(3, 1) = -c0;
  return f;
}

EuclideanFrame closed_form_frame(double v, double r) {
  return orthonormal_frame(symmetric_tmst_probe(v, r), tmst_diagonal_basis(v, r));
}

Certificate certificate_closed(double v, double r, double c0) {
  check_state(v, r);
  if (!(v > 0.5)) {
    throw InputError("closed-form certificates need v > 1/2 (C is unbounded for pure probes)");
  }
  const MatrixXd f = optimal_F_closed(v, r, c0);
  const Complex i(0.0, 1.0);
  const double em = std::exp(-2.0 * r);
  const double ep = std::exp(2.0 * r);

  Certificate cert;
  cert.x = BlockMatrix::zeros({4, 4, 4});
  double h;  // common value of the two H diagonal coordinates
  if (regime_of(v, r) == Regime::kBelowThreshold) {
    h = (4.0 * v * v - 1.0) / (4.0 * v * std::cosh(2.0 * r) - 2.0);
    const double s = h * h / (2.0 * v);
    MatrixXcd x3(4, 4);
    x3 << ep, i, -1.0, -i * ep,
          -i, em, i * em, -1.0,
          -1.0, -i * em, em, i,
          i * ep, -1.0, -i, ep;
    cert.x.blocks[2] = s * x3;
  } else {
    h = 2.0 * v * em;
    MatrixXcd x2 = MatrixXcd::Zero(4, 4);
    x2(1, 1) = x2(2, 2) = em * (1.0 - 4.0 * v * v * em * em) / (2.0 * v);
    cert.x.blocks[1] = x2;
    const double a = 2.0 * v * em;
    MatrixXcd x3(4, 4);
    x3 << 2.0 * v, i, -a, -4.0 * v * v * em * i,
          -i, 1.0 / (2.0 * v), em * i, -a,
          -a, -em * i, 1.0 / (2.0 * v), i,
          4.0 * v * v * em * i, -a, -i, 2.0 * v;
    cert.x.blocks[2] = em * x3;
  }
  MatrixXcd x1 = MatrixXcd::Zero(4, 4);
  x1(0, 0) = x1(1, 1) = 1.0;
  x1(0, 2) = x1(2, 0) = x1(1, 3) = x1(3, 1) = -h;
  x1(2, 2) = x1(3, 3) = h * h;
  cert.x.blocks[0] = x1;

  cert.y.resize(13);
  cert.y << symmetric_coordinates(f), h, h, 0.0;
  return cert;
}

CertificateSpectra certificate_eigenvalues(double v, double r, double c0) {
  const Certificate cert = certificate_closed(v, r, c0);
  const SdpProblem problem = build_sdp(closed_form_frame(v, r));

  CertificateSpectra out;
  out.slack_numeric = block_spectrum(problem.combine(cert.y) - problem.c_matrix);
  out.x_numeric = block_spectrum(cert.x);

  const double ch = std::cosh(2.0 * r);
  const double em = std::exp(-2.0 * r);
  const double q = 4.0 * v * v - 1.0;
  std::vector<double> slack;
  std::vector<double> x;
  if (regime_of(v, r) == Regime::kBelowThreshold) {
    const double a = q / (4.0 * v * ch - 2.0);
    const double k = 2.0 * v + q * c0;
    const double root1 = std::sqrt(std::max(0.0, k * k - 8.0 * v * q * c0 / (ch * ch)));
    const double root2 =
        std::sqrt(std::max(0.0, k * k * ch * ch - 4.0 * v * v - 4.0 * v * q * c0));
    const double lo = (4.0 * v * v - k * ch - root2) / q;
    const double hi = (4.0 * v * v - k * ch + root2) / q;
    slack = {a + 1.0 / a, a + 1.0 / a,
             2.0 * (c0 + 2.0 * v / q) * ch,
             ch / q * (k + root1), ch / q * (k - root1),
             hi, hi, lo, lo};
    const double d = 2.0 * v * ch - 1.0;
    const double big = 1.0 + q * q / (4.0 * d * d);
    x = {q * q * ch / (2.0 * v * d * d), big, big};
  } else {
    const double a = (1.0 + 4.0 * v * v * em * em) / (2.0 * v * em);
    const double b = (4.0 * v * v + 1.0) / q;
    slack = {1.0, 1.0, a, a, b, b};
    const double p = 1.0 + 4.0 * v * v * em * em;
    const double s = (1.0 - 4.0 * v * v * em * em) * em / (2.0 * v);
    const double w = (1.0 + 4.0 * v * v) * em / (2.0 * v);
    x = {p, p, s, s, w * (1.0 - 2.0 * v * em), w * (1.0 + 2.0 * v * em)};
  }
  out.slack_closed = padded(std::move(slack), 12);
  out.x_closed = padded(std::move(x), 12);
  return out;
}

ClosedFormSolution solve_closed(double v, double r, double c0) {
  ClosedFormSolution s;
  s.v = v;
  s.r = r;
  s.regime = regime_of(v, r);
  s.r0 = entanglement_threshold(v);
  s.sigma_star = holevo_bound_closed(v, r);
  s.c0 = c0;
  s.f_opt = optimal_F_closed(v, r, c0);
  if (s.regime == Regime::kBelowThreshold) s.t = heterodyne_transmission(v, r);
  if (v > 0.5) s.certificate = certificate_closed(v, r, c0);
  return s;
}

}  // namespace holevo
