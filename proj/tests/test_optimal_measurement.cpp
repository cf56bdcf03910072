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


#include "holevo/optimal_measurement.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "holevo/errors.hpp"
#include "holevo/holevo_sdp.hpp"
#include "test_support.hpp"

namespace holevo {
namespace {

using testing::plan_mse_ref;
using testing::sigma_ref;
using testing::tmst_plan_ref;

TEST(TmstPlan, MatchesTemplate) {
  for (double t : {0.3, 0.8, 1.0}) {
    EXPECT_LT(max_abs(MatrixXd(tmst_plan(t) - tmst_plan_ref(t))), 1e-15);
  }
}

TEST(CircuitParams, RecognisesBothCircuits) {
  auto hom = circuit_params(tmst_plan_ref(1.0));
  ASSERT_TRUE(hom.has_value());
  EXPECT_EQ(hom->type, CircuitType::kDoubleHomodyne);
  EXPECT_TRUE(hom->feasible);

  auto het = circuit_params(tmst_plan_ref(0.7));
  ASSERT_TRUE(het.has_value());
  EXPECT_EQ(het->type, CircuitType::kDoubleUnbalancedHeterodyne);
  EXPECT_NEAR(het->t, 0.7, 1e-15);
  EXPECT_TRUE(het->feasible);

  auto over = circuit_params(tmst_plan_ref(1.3));
  ASSERT_TRUE(over.has_value());
  EXPECT_FALSE(over->feasible);

  MatrixXd z = tmst_plan_ref(0.7);
  z(0, 1) = 0.2;
  EXPECT_FALSE(circuit_params(z).has_value());
  EXPECT_STREQ(circuit_name(CircuitType::kDoubleHomodyne), "double_homodyne");
}

TEST(AchievedMse, TemplatePlansAreUnbiased) {
  const ProbeModel m = symmetric_tmst_probe(1.0, 0.3);
  for (double t : {0.2, 0.6, 1.0}) {
    const MatrixXd z = tmst_plan_ref(t);
    EXPECT_LT(unbiasedness_residual(z, m), 1e-15);
    const MseDecomposition mse = achieved_mse(z, m);
    EXPECT_NEAR(mse.total, plan_mse_ref(z, m.covariance()), 1e-13);
    EXPECT_NEAR(mse.total, mse.trace_re + mse.trabs_im, 1e-15);
  }
}

TEST(AchievedMse, DoubleHomodyneValue) {
  for (double v : {0.75, 1.0}) {
    for (double r : {0.0, 0.4, 1.0}) {
      const MseDecomposition mse = achieved_mse(tmst_plan_ref(1.0), symmetric_tmst_probe(v, r));
      EXPECT_NEAR(mse.total, 4.0 * v * std::exp(-2.0 * r), 1e-13);
    }
  }
}

TEST(AchievedMse, RejectsBiasedPlan) {
  MatrixXd z = tmst_plan_ref(0.5);
  z(0, 0) += 1e-3;
  EXPECT_THROW(achieved_mse(z, symmetric_tmst_probe(1.0, 0.3)), BiasedPlanError);
}

TEST(ExtractPlan, SymmetricProbeGrid) {
  for (const auto& [v, r] : testing::tmst_grid()) {
    if (v == 0.5 && r == 0.0) continue;  // optimal plan is not unique there
    const ProbeModel m = symmetric_tmst_probe(v, r);
    const EuclideanFrame f = orthonormal_frame(m);
    const BoundResult b = holevo_bound(f);
    const MeasurementPlan plan = extract_plan(m, f, b.f_opt);
    const double t = r < testing::r0_ref(v) ? testing::t_ref(v, r) : 1.0;
    EXPECT_LT(max_abs(MatrixXd(plan.z - tmst_plan_ref(t))), 1e-8) << v << " " << r;
    EXPECT_LT(unbiasedness_residual(plan.z, m), 1e-9);
    EXPECT_NEAR(plan.achieved_mse(), sigma_ref(v, r), 1e-7);
    ASSERT_TRUE(plan.circuit.has_value());
    EXPECT_EQ(plan.circuit->type, t < 1.0 - 1e-8 ? CircuitType::kDoubleUnbalancedHeterodyne
                                                 : CircuitType::kDoubleHomodyne);
  }
}

TEST(ExtractPlan, RawOptimizerPlanIsClose) {
  const ProbeModel m = symmetric_tmst_probe(1.0, 0.2);
  const EuclideanFrame f = orthonormal_frame(m);
  const BoundResult b = holevo_bound(f);
  const MeasurementPlan raw = extract_plan(m, f, b.f_opt, false);
  EXPECT_FALSE(raw.refined);
  EXPECT_LT(max_abs(MatrixXd(raw.z - tmst_plan_ref(testing::t_ref(1.0, 0.2)))), 1e-4);
  EXPECT_NEAR(raw.achieved_mse(), sigma_ref(1.0, 0.2), 1e-6);
}

TEST(ExtractPlan, CommutatorsAreAntisymmetric) {
  const ProbeModel m = symmetric_tmst_probe(1.0, 0.2);
  const EuclideanFrame f = orthonormal_frame(m);
  const MeasurementPlan plan = extract_plan(m, f, holevo_bound(f).f_opt);
  EXPECT_EQ(max_abs(MatrixXd(plan.commutators + plan.commutators.transpose())), 0.0);
  EXPECT_NEAR(std::abs(plan.commutators(0, 1)), plan.mse.trabs_im, 1e-14);
}

TEST(DoubleHomodyne, SuboptimalBelowThreshold) {
  for (double v : {0.75, 1.0, 2.0}) {
    for (double frac : {0.0, 0.3, 0.8}) {
      const double r = frac * testing::r0_ref(v);
      const double hom = achieved_mse(tmst_plan_ref(1.0), symmetric_tmst_probe(v, r)).total;
      EXPECT_GT(hom - sigma_ref(v, r), 1e-6) << v << " " << r;
    }
  }
}

TEST(TwoParameterMinimax, FrozenProbes) {
  for (const auto& p : testing::frozen_probes()) {
    const ProbeModel m = ProbeModel::create(p.covariance, p.coeffs);
    const TwoParameterOptimum opt = minimize_two_parameter_plan(m);
    EXPECT_NEAR(opt.value, p.sigma, 1e-10 * p.sigma);
    EXPECT_LE(std::abs(opt.lambda), 1.0);
    EXPECT_LT(unbiasedness_residual(opt.z, m), 1e-9);
    EXPECT_NEAR(plan_mse_ref(opt.z, p.covariance), p.sigma, 1e-9 * p.sigma);
  }
}

TEST(TwoParameterMinimax, RequiresTwoParameters) {
  EXPECT_THROW(minimize_two_parameter_plan(ProbeModel::create(MatrixXd::Identity(2, 2),
                                                              MatrixXd::Identity(1, 2))),
               InputError);
}

}  // namespace
}  // namespace holevo
