// Copyright 2026 The gwass Authors
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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gwass/dynamics.hpp"

namespace gwass {
namespace {

DiscreteMeasure shifted(const DiscreteMeasure& mu, double by) {
  return push_forward(mu, [by](std::span<const double> x, std::span<double> out) {
    out[0] = x[0] + by;
  });
}

TEST(Dynamics, ReferenceConstants) {
  const auto ref = reference_problem();
  const auto c = hypothesis_constants(ref.v, ref.h, total_mass(ref.mu0), ref.T, 1.0);
  EXPECT_NEAR(c.P, 0.2, 1e-12);
  EXPECT_EQ(c.Q, 0.0);
  EXPECT_NEAR(c.m, 1.2, 1e-12);
  EXPECT_NEAR(c.C2, c.m * c.N * (c.M * c.m + c.P) + c.M * c.P / 4.0, 1e-15);
  EXPECT_NEAR(c.C2, 1.40869, 1e-5);
  EXPECT_NEAR(c.C1, 5.0 * c.L + 4.0 * c.m * c.N + c.Q, 1e-15);
  EXPECT_LE(c.R, 0.25);
}

TEST(Dynamics, SnapshotsAndMass) {
  const auto ref = reference_problem();
  const auto traj = sample_and_hold(ref.mu0, ref.v, ref.h, ref.T, 5, {});
  ASSERT_EQ(traj.snapshots.size(), 33u);
  EXPECT_TRUE(traj.warnings.empty());
  double previous = 0.0;
  for (std::size_t n = 0; n < traj.snapshots.size(); ++n) {
    const auto& s = traj.snapshots[n];
    EXPECT_DOUBLE_EQ(s.t, n / 32.0);
    const double mass = total_mass(s.mu);
    EXPECT_LE(mass, total_mass(ref.mu0) + s.t * ref.h.P() + 1e-12);
    EXPECT_GE(mass, previous);
    previous = mass;
  }
  EXPECT_NEAR(previous, 1.2, 1e-12);
}

TEST(Dynamics, SourceOnlyIsExact) {
  const auto ref = reference_problem();
  const VectorFieldModel still(BaseField::constant({0.0}), InteractionKernel::none(1), 2.0);
  const auto traj = sample_and_hold(ref.mu0, still, ref.h, 1.0, 3, {});
  for (const auto& s : traj.snapshots) {
    EXPECT_TRUE(same_measure(s.mu, add(ref.mu0, scale(ref.h.cloud(), s.t)), kDefaultQuantum, 1e-12));
  }
}

TEST(Dynamics, DriftOnlyTranslates) {
  const auto ref = reference_problem();
  const VectorFieldModel drift(BaseField::constant({-0.4}), InteractionKernel::none(1), 2.0);
  const auto traj = sample_and_hold(ref.mu0, drift, SourceModel::none(1), 2.0, 4, {});
  EXPECT_TRUE(same_measure(traj.snapshots.back().mu, shifted(ref.mu0, -0.8)));
}

TEST(Dynamics, SaturatingSourceLevelsOff) {
  const auto ref = reference_problem();
  const auto h = SourceModel::bump_quadrature(0.0, 0.25, 10, 1.0, Modulation::saturating(1.5));
  EXPECT_NEAR(h.Q(), 1.0 / 1.5, 1e-12);
  const VectorFieldModel still(BaseField::constant({0.0}), InteractionKernel::none(1), 10.0);
  const auto traj = sample_and_hold(ref.mu0, still, h, 8.0, 6, {});
  const double final_mass = total_mass(traj.snapshots.back().mu);
  EXPECT_LT(final_mass, 1.5);
  EXPECT_GT(final_mass, 1.45);
}

TEST(Dynamics, EvaluateBetweenGridTimes) {
  const auto ref = reference_problem();
  const auto traj = sample_and_hold(ref.mu0, ref.v, ref.h, ref.T, 3, {});
  EXPECT_EQ(evaluate_at(traj, ref.v, ref.h, 0.25, {}), traj.snapshots[2].mu);
  const auto mid = evaluate_at(traj, ref.v, ref.h, 0.3125, {});
  EXPECT_NEAR(total_mass(mid), total_mass(traj.snapshots[2].mu) + 0.0625 * 0.2, 1e-12);
  EXPECT_THROW(evaluate_at(traj, ref.v, ref.h, 1.5, {}), std::invalid_argument);
}

TEST(Dynamics, RejectsBadInput) {
  const auto ref = reference_problem();
  EXPECT_THROW(sample_and_hold(ref.mu0, ref.v, ref.h, ref.T, 15, {}), std::length_error);
  EXPECT_THROW(sample_and_hold(ref.mu0, ref.v, ref.h, 0.0, 3, {}), std::invalid_argument);
  EXPECT_THROW(sample_and_hold(DiscreteMeasure::dirac({0.0, 0.0}), ref.v, ref.h, 1.0, 3, {}),
               DimensionMismatch);
}

TEST(Dynamics, WarnsWhenMassBoundIsTooSmall) {
  const auto ref = reference_problem();
  const VectorFieldModel small(BaseField::constant({0.5}), InteractionKernel::bump(1, 0.5, 0.3), 1.0);
  const auto traj = sample_and_hold(ref.mu0, small, ref.h, 1.0, 2, {});
  EXPECT_FALSE(traj.warnings.empty());
}

TEST(Dynamics, CauchyRowsShrink) {
  const auto ref = reference_problem();
  const auto table = cauchy_table(ref.mu0, ref.v, ref.h, ref.T, 3, 6, ref.params, {});
  ASSERT_EQ(table.rows.size(), 3u);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    EXPECT_EQ(table.rows[i].level, 3 + static_cast<int>(i));
    EXPECT_LE(table.rows[i].D, table.rows[i].bound);
    EXPECT_NEAR(table.rows[i].bound, 2.0 * table.constants.C2 * std::ldexp(1.0, -(3 + static_cast<int>(i))), 1e-12);
    if (i > 0) {
      EXPECT_LT(table.rows[i].D, table.rows[i - 1].D);
    }
  }
  EXPECT_LT(table.slope, -0.8);
}

TEST(Dynamics, DependenceOnInitialData) {
  const auto ref = reference_problem();
  const auto nu0 = shifted(ref.mu0, 0.05);
  const auto table = continuous_dependence_check(ref.mu0, nu0, ref.v, ref.h, ref.T, 4, ref.params, {});
  ASSERT_EQ(table.rows.size(), 17u);
  EXPECT_NEAR(table.rows[0].distance, gw_distance(ref.mu0, nu0, ref.params).value, 1e-12);
  const auto& c = table.constants;
  EXPECT_NEAR(table.rate, 2.0 * c.L + 2.0 * c.m * c.N + c.Q + 1.0, 1e-12);
  for (const auto& row : table.rows) EXPECT_LE(row.distance, row.bound + 1e-9);
}

TEST(Dynamics, LogSlope) {
  EXPECT_NEAR(log2_slope({3, 4, 5, 6}, {0.1, 0.05, 0.025, 0.0125}), -1.0, 1e-12);
  EXPECT_NEAR(log2_slope({1, 2}, {1.0, 4.0}), 2.0, 1e-12);
}

}  // namespace
}  // namespace gwass
