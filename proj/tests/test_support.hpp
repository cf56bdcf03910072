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

// Reference formulas and fixtures shared by the test binaries.
//
// Nothing here calls into the library's own closed-form or Fisher code; the
// oracles are written out directly so that a mistake in the library cannot
// hide behind the same mistake in the test.

#ifndef HOLEVO_TESTS_TEST_SUPPORT_HPP_
#define HOLEVO_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "holevo/gaussian_model.hpp"

namespace holevo::testing {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

inline MatrixXd omega_ref(int n) {
  MatrixXd w = MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    w(2 * k, 2 * k + 1) = 1.0;
    w(2 * k + 1, 2 * k) = -1.0;
  }
  return w;
}

inline double r0_ref(double v) { return 0.5 * std::log(2.0 * v); }

/// Holevo bound of the symmetric two-mode squeezed thermal probe.
inline double sigma_ref(double v, double r) {
  if (r < r0_ref(v)) {
    return (4.0 * v * v - 1.0) / (2.0 * v * std::cosh(2.0 * r) - 1.0);
  }
  return 4.0 * v * std::exp(-2.0 * r);
}

/// Transmission of the optimal unbalanced heterodyne below threshold.
inline double t_ref(double v, double r) {
  return (2.0 * v * std::exp(2.0 * r) - 1.0) /
         (4.0 * v * std::cosh(2.0 * r) - 2.0);
}

/// Sum of eigenvalue magnitudes of a Hermitian matrix.
inline double trabs_ref(const MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  return es.eigenvalues().cwiseAbs().sum();
}

/// Tr (C A^-1 C^T)^-1, straight from the covariance.
inline double sld_ref(const MatrixXd& a, const MatrixXd& c) {
  const MatrixXd g = c * a.ldlt().solve(c.transpose());
  return g.inverse().trace();
}

/// RLD bound from C (A + i Omega / 2)^-1 C^T. Only valid for mixed probes.
inline double rld_ref(const MatrixXd& a, const MatrixXd& c) {
  const int n = static_cast<int>(a.rows() / 2);
  const MatrixXcd k =
      a.cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) * omega_ref(n).cast<std::complex<double>>();
  const MatrixXcd cc = c.cast<std::complex<double>>();
  const MatrixXcd g = cc * k.partialPivLu().solve(cc.transpose());
  const MatrixXcd ginv = g.inverse();
  const MatrixXcd im_part =
      std::complex<double>(0.0, 1.0) * ginv.imag().cast<std::complex<double>>();
  return ginv.real().trace() + trabs_ref(im_part);
}

/// Mean-square error sum of a two-row linear plan: Tr Z A Z^T + |Delta(z1, z2)|.
inline double plan_mse_ref(const MatrixXd& z, const MatrixXd& a) {
  const int n = static_cast<int>(a.rows() / 2);
  const double commutator = z.row(0) * omega_ref(n) * z.row(1).transpose();
  return (z * a * z.transpose()).trace() + std::abs(commutator);
}

inline MatrixXd tmst_covariance_ref(double v, double r) {
  const double lo = v * std::exp(-2.0 * r);
  const double hi = v * std::exp(2.0 * r);
  return VectorXd((VectorXd(4) << lo, hi, hi, lo).finished()).asDiagonal();
}

inline MatrixXd tmst_coeffs_ref() {
  const double s = 1.0 / std::sqrt(2.0);
  MatrixXd c(2, 4);
  c << s, 0.0, -s, 0.0,  //
      0.0, s, 0.0, -s;
  return c;
}

inline MatrixXd tmst_plan_ref(double t) {
  const double s = std::sqrt(2.0);
  MatrixXd z(2, 4);
  z << s * t, 0.0, s * (t - 1.0), 0.0,  //
      0.0, s * (1.0 - t), 0.0, -s * t;
  return z;
}

/// Symplectic matrix from a random Hamiltonian generator via the Cayley
/// transform (I + K)(I - K)^-1 with K = Omega H.
inline MatrixXd random_symplectic(std::mt19937_64& rng, int n, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  MatrixXd h(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = 0; j <= i; ++j) h(i, j) = h(j, i) = normal(rng);
  }
  const MatrixXd k = omega_ref(n) * h;
  const MatrixXd id = MatrixXd::Identity(2 * n, 2 * n);
  return (id + k) * (id - k).inverse();
}

struct RandomProbe {
  MatrixXd covariance;
  MatrixXd coeffs;
};

/// Random mixed Gaussian probe whose SLD information has condition number
/// below `max_condition`.
inline RandomProbe random_probe(std::mt19937_64& rng, int n, int l,
                                double max_condition = 1e3) {
  std::uniform_real_distribution<double> thermal(0.55, 1.6);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    VectorXd nu(2 * n);
    for (int k = 0; k < n; ++k) nu(2 * k) = nu(2 * k + 1) = thermal(rng);
    const MatrixXd s = random_symplectic(rng, n, 0.35);
    RandomProbe p;
    p.covariance = s * nu.asDiagonal() * s.transpose();
    p.covariance = 0.5 * (p.covariance + p.covariance.transpose()).eval();
    p.coeffs.resize(l, 2 * n);
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < 2 * n; ++j) p.coeffs(i, j) = normal(rng);
    }
    const MatrixXd g = p.coeffs * p.covariance.ldlt().solve(p.coeffs.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(g);
    const double lo = es.eigenvalues().minCoeff();
    if (lo > 0.0 && es.eigenvalues().maxCoeff() / lo < max_condition) return p;
  }
}

/// Acceptance-style grid of (v, r) points for the symmetric probe.
inline std::vector<std::pair<double, double>> tmst_grid() {
  std::vector<std::pair<double, double>> pts;
  for (double v : {0.5, 0.75, 1.0, 2.0}) {
    for (int k = 0; k <= 15; ++k) pts.emplace_back(v, 0.1 * k);
    if (v > 0.5) pts.emplace_back(v, r0_ref(v));
  }
  return pts;
}

/// Independently computed Holevo values for fixed random probes (two
/// parameters; exact two-parameter minimax solved to machine precision and
/// cross-checked against a general conic solver).
struct FrozenProbe {
  MatrixXd covariance;
  MatrixXd coeffs;
  double sigma;
};

inline std::vector<FrozenProbe> frozen_probes() {
  std::vector<FrozenProbe> out;
  {
    FrozenProbe p;
    p.covariance.resize(2, 2);
    p.covariance << 0.422466, 0.092761, 0.092761, 1.463771;
    p.coeffs.resize(2, 2);
    p.coeffs << 0.18794, 0.53719, 1.089597, 0.504862;
    p.sigma = 9.931337034351728;
    out.push_back(p);
  }
  {
    FrozenProbe p;
    p.covariance.resize(4, 4);
    p.covariance << 1.196523, 0.116841, 0.19324, -0.161603,  //
        0.116841, 1.083294, -0.214071, -0.744768,             //
        0.19324, -0.214071, 0.863013, 1.006421,               //
        -0.161603, -0.744768, 1.006421, 2.71684;
    p.coeffs.resize(2, 4);
    p.coeffs << -1.172789, -1.647229, 0.830494, 0.705569,  //
        0.238182, 0.212045, -0.095249, 0.224023;
    p.sigma = 17.529192978226778;
    out.push_back(p);
  }
  {
    FrozenProbe p;
    p.covariance.resize(4, 4);
    p.covariance << 0.981712, 0.596457, -0.293207, 1.16943,  //
        0.596457, 1.686641, -0.155144, 1.351702,              //
        -0.293207, -0.155144, 0.520557, -1.973122,            //
        1.16943, 1.351702, -1.973122, 10.002851;
    p.coeffs.resize(2, 4);
    p.coeffs << -1.356952, -0.276924, 0.813284, 0.525666,  //
        -1.723373, -0.222008, 0.804262, 0.182913;
    p.sigma = 5.799404043060364;
    out.push_back(p);
  }
  {
    FrozenProbe p;
    p.covariance.resize(6, 6);
    p.covariance << 1.434339, 0.006162, 0.090725, -0.000781, -0.229114, 0.001973,
        0.006162, 1.472891, -0.014148, -0.005009, 0.03573, 0.012649,  //
        0.090725, -0.014148, 3.407549, 1.079293, 1.12152, 0.427379,   //
        -0.000781, -0.005009, 1.079293, 0.877769, 0.427379, -0.058441,
        -0.229114, 0.03573, 1.12152, 0.427379, 1.019391, 0.169234,  //
        0.001973, 0.012649, 0.427379, -0.058441, 0.169234, 1.002213;
    p.coeffs.resize(2, 6);
    p.coeffs << -0.543689, -0.798775, 1.189374, -0.260291, -0.450035, -0.385667,
        0.48768, 0.439812, -0.787575, 0.253867, 0.319253, -0.155389;
    p.sigma = 7.651826474158244;
    out.push_back(p);
  }
  return out;
}

}  // namespace holevo::testing

#endif  // HOLEVO_TESTS_TEST_SUPPORT_HPP_
