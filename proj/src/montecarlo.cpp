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

#include "holevo/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <thread>
#include <vector>

#include "holevo/errors.hpp"

namespace holevo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch) {
  return splitmix64(splitmix64(seed) ^ splitmix64(batch + 0x632be59bd9b4e019ULL));
}

// Box-Muller on 53-bit uniforms; std::normal_distribution is not
// reproducible across standard libraries.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    spare_ = rad * std::sin(ang);
    has_spare_ = true;
    return rad * std::cos(ang);
  }

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Neumaier compensated sum.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct BatchSums {
  std::array<Accumulator, 2> est;
  std::array<Accumulator, 2> est_sq;
  Accumulator err;
  Accumulator err_sq;
};

BatchSums run_batch(const ReadoutModel& model, const Eigen::LLT<MatrixXd>& chol,
                    const VectorXd& mean, const std::array<double, 2>& theta,
                    std::int64_t shots, std::uint64_t seed) {
  NormalStream rng(seed);
  const Eigen::Index k = mean.size();
  const MatrixXd l = chol.matrixL();
  VectorXd xi(k);
  BatchSums sums;
  for (std::int64_t s = 0; s < shots; ++s) {
    for (Eigen::Index i = 0; i < k; ++i) xi(i) = rng.next();
    const VectorXd q = mean + l * xi;
    const VectorXd est = model.estimator * q;
    double e = 0.0;
    for (int j = 0; j < 2; ++j) {
      sums.est[j].add(est(j));
      sums.est_sq[j].add(est(j) * est(j));
      const double d = est(j) - theta[j];
      e += d * d;
    }
    sums.err.add(e);
    sums.err_sq.add(e * e);
  }
  return sums;
}

void check_spec(const CircuitSpec& spec) {
  if (!(spec.v >= 0.5) || !std::isfinite(spec.v)) {
    throw InputError("v must be a finite number of at least 1/2");
  }
  if (!(spec.r >= 0.0) || !std::isfinite(spec.r)) {
    throw InputError("r must be finite and non-negative");
  }
  if (spec.shots < 1) throw InputError("shots must be at least 1");
  if (spec.scheme == CircuitType::kDoubleUnbalancedHeterodyne &&
      !(spec.t > 0.0 && spec.t <= 1.0)) {
    throw InputError("heterodyne transmission must lie in (0, 1]");
  }
  if (!std::isfinite(spec.theta[0]) || !std::isfinite(spec.theta[1])) {
    throw InputError("theta must be finite");
  }
}

}  // namespace

MatrixXd beam_splitter_symplectic(double t, int mode_a, int mode_b, int n_modes) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("transmission must lie in [0, 1]");
  if (mode_a == mode_b || mode_a < 0 || mode_b < 0 || mode_a >= n_modes ||
      mode_b >= n_modes) {
    throw InputError("beam splitter needs two distinct valid modes");
  }
  const double c = std::sqrt(t);
  const double s = std::sqrt(1.0 - t);
  MatrixXd out = MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  for (int q = 0; q < 2; ++q) {
    const int ia = 2 * mode_a + q;
    const int ib = 2 * mode_b + q;
    out(ia, ia) = c;
    out(ia, ib) = s;
    out(ib, ia) = -s;
    out(ib, ib) = c;
  }
  return out;
}

MatrixXd tmst_covariance(double v, double r) {
  const double ch = v * std::cosh(2.0 * r);
  const double sh = v * std::sinh(2.0 * r);
  MatrixXd a(4, 4);
  a << ch, 0.0, -sh, 0.0,
       0.0, ch, 0.0, sh,
       -sh, 0.0, ch, 0.0,
       0.0, sh, 0.0, ch;
  return a;
}

ReadoutModel readout_model(const CircuitSpec& spec) {
  check_spec(spec);
  const bool heterodyne = spec.scheme == CircuitType::kDoubleUnbalancedHeterodyne;
  const int modes = heterodyne ? 4 : 2;

  // Phase-space map from (theta1, theta2) to the mean, and the covariance,
  // with vacuum ancillas on modes 2 and 3.
  MatrixXd mean_map = MatrixXd::Zero(2 * modes, 2);
  mean_map(0, 0) = 1.0;
  mean_map(1, 1) = 1.0;
  MatrixXd cov = 0.5 * MatrixXd::Identity(2 * modes, 2 * modes);
  cov.topLeftCorner(4, 4) = tmst_covariance(spec.v, spec.r);

  MatrixXd s = beam_splitter_symplectic(0.5, 0, 1, modes);
  if (heterodyne) {
    s = beam_splitter_symplectic(spec.t, 1, 3, modes) *
        beam_splitter_symplectic(spec.t, 0, 2, modes) * s;
  }
  mean_map = s * mean_map;
  cov = s * cov * s.transpose();

  // Records: Q and P from the two 50:50 outputs; with the extra splitters the
  // other port of each carries the complementary quadrature.
  std::vector<int> rows;
  if (heterodyne) {
    rows = {0, 6, 5, 3};  // Q0, Q3, P2, P1
  } else {
    rows = {0, 3};  // Q0, P1
  }
  ReadoutModel out;
  const Eigen::Index k = static_cast<Eigen::Index>(rows.size());
  out.gain.resize(k, 2);
  out.covariance.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    out.gain.row(i) = mean_map.row(rows[i]);
    for (Eigen::Index j = 0; j < k; ++j) out.covariance(i, j) = cov(rows[i], rows[j]);
  }

  // Generalized least squares: the minimum-variance unbiased linear estimator.
  const Eigen::LLT<MatrixXd> vllt(out.covariance);
  if (vllt.info() != Eigen::Success) {
    throw NumericalError("readout covariance is not positive definite");
  }
  const MatrixXd vinv_g = vllt.solve(out.gain);
  const MatrixXd info = out.gain.transpose() * vinv_g;
  const Eigen::LLT<MatrixXd> illt(info);
  if (illt.info() != Eigen::Success) {
    throw NumericalError("readouts do not identify both parameters");
  }
  out.estimator = illt.solve(vinv_g.transpose());
  out.expected_mse = illt.solve(MatrixXd::Identity(2, 2)).trace();
  return out;
}

SimulationResult simulate(const CircuitSpec& spec) {
  const ReadoutModel model = readout_model(spec);
  const Eigen::LLT<MatrixXd> chol(model.covariance);
  const VectorXd mean =
      model.gain * Eigen::Vector2d(spec.theta[0], spec.theta[1]);

  const std::int64_t n_batches = (spec.shots + kShotsPerBatch - 1) / kShotsPerBatch;
  std::vector<BatchSums> batches(static_cast<size_t>(n_batches));
  const int threads = std::max<int>(
      1, spec.threads > 0 ? spec.threads
                          : static_cast<int>(std::thread::hardware_concurrency()));
  auto work = [&](int worker) {
    for (std::int64_t b = worker; b < n_batches; b += threads) {
      const std::int64_t n =
          std::min<std::int64_t>(kShotsPerBatch, spec.shots - b * kShotsPerBatch);
      batches[static_cast<size_t>(b)] =
          run_batch(model, chol, mean, spec.theta, n,
                    batch_seed(spec.seed, static_cast<std::uint64_t>(b)));
    }
  };
  if (threads == 1 || n_batches == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < threads; ++w) jobs.push_back(std::async(std::launch::async, work, w));
    for (auto& j : jobs) j.get();
  }

  // Reduce in batch order so the result is independent of scheduling.
  BatchSums total;
  for (const auto& b : batches) {
    for (int j = 0; j < 2; ++j) {
      total.est[j].add(b.est[j].value());
      total.est_sq[j].add(b.est_sq[j].value());
    }
    total.err.add(b.err.value());
    total.err_sq.add(b.err_sq.value());
  }
  const double n = static_cast<double>(spec.shots);
  SimulationResult out;
  out.shots_used = spec.shots;
  out.expected_mse = model.expected_mse;
  for (int j = 0; j < 2; ++j) {
    const double m = total.est[j].value() / n;
    const double var = std::max(0.0, total.est_sq[j].value() / n - m * m);
    out.empirical_mean[j] = m;
    out.mean_standard_error[j] = std::sqrt(var / n);
  }
  out.empirical_mse_sum = total.err.value() / n;
  const double var =
      std::max(0.0, total.err_sq.value() / n - out.empirical_mse_sum * out.empirical_mse_sum);
  out.standard_error = std::sqrt(var / n);
  return out;
}

}  // namespace holevo
