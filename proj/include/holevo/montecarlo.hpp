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

// Shot-level simulation of the two joint measurements on the displaced
// two-mode squeezed thermal probe.
//
// Every element is Gaussian, so the homodyne records are drawn from the exact
// joint normal distribution of the measured quadratures after the beam
// splitters. Shots are split into fixed-size batches; batch k draws from a
// mt19937_64 stream seeded with splitmix64(seed, k), so results do not depend
// on how batches are scheduled across threads.

#ifndef HOLEVO_MONTECARLO_HPP_
#define HOLEVO_MONTECARLO_HPP_

#include <array>
#include <cstdint>

#include "holevo/linalg.hpp"
#include "holevo/optimal_measurement.hpp"

namespace holevo {

inline constexpr std::int64_t kShotsPerBatch = 1 << 16;

struct CircuitSpec {
  CircuitType scheme = CircuitType::kDoubleHomodyne;
  double v = 0.5;
  double r = 0.0;
  double t = 1.0;  ///< used by the heterodyne scheme only
  std::array<double, 2> theta{0.0, 0.0};
  std::int64_t shots = 1000;
  std::uint64_t seed = 0;
  int threads = 0;  ///< 0 picks the hardware concurrency
};

struct SimulationResult {
  std::array<double, 2> empirical_mean{0.0, 0.0};
  std::array<double, 2> mean_standard_error{0.0, 0.0};
  double empirical_mse_sum = 0.0;
  double standard_error = 0.0;  ///< of empirical_mse_sum
  double expected_mse = 0.0;    ///< exact MSE sum of the estimator
  std::int64_t shots_used = 0;
};

/// Beam splitter with intensity transmission t acting on modes a and b of an
/// n-mode system: a -> sqrt(t) a + sqrt(1-t) b, b -> -sqrt(1-t) a + sqrt(t) b,
/// applied to both quadratures.
MatrixXd beam_splitter_symplectic(double t, int mode_a, int mode_b, int n_modes);

/// Covariance of the two-mode squeezed thermal state before the decoupling
/// beam splitter: variances v cosh 2r, Cov(Q1, Q2) = -v sinh 2r and
/// Cov(P1, P2) = v sinh 2r.
MatrixXd tmst_covariance(double v, double r);

/// Linear readout model of a scheme: measured record q has mean G theta and
/// covariance V. Exposed for testing.
struct ReadoutModel {
  MatrixXd gain;        ///< G, one row per homodyne record
  MatrixXd covariance;  ///< V
  MatrixXd estimator;   ///< W with theta_hat = W q, W G = I
  double expected_mse = 0.0;
};
ReadoutModel readout_model(const CircuitSpec& spec);

SimulationResult simulate(const CircuitSpec& spec);

}  // namespace holevo

#endif  // HOLEVO_MONTECARLO_HPP_
