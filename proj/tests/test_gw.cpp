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

#include <algorithm>
#include <cmath>
#include <random>

#include "gwass/gw.hpp"
#include "gwass/transport.hpp"
#include "oracles.hpp"

namespace gwass {
namespace {

DiscreteMeasure line(std::initializer_list<std::pair<double, double>> atoms) {
  DiscreteMeasure mu(1);
  for (auto [x, w] : atoms) mu.add_atom({x}, w);
  return mu;
}

GwParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
  return {std::exp(u(rng)), std::exp(u(rng)), rng() % 2 ? 2.0 : 1.0};
}

TEST(Gw, DiracFormula) {
  for (double a : {0.5, 1.0, 2.0}) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (int k = 1; k <= 50; ++k) {
        const double x = 0.1 * k;
        const auto r = gw_distance(DiscreteMeasure::dirac({0.0}), DiscreteMeasure::dirac({x}),
                                   {a, b, 1.0});
        EXPECT_NEAR(r.value, std::min(2.0 * a, b * x), 1e-9) << a << ' ' << b << ' ' << x;
      }
    }
  }
}

TEST(Gw, TieGoesToRemoval) {
  const auto r = gw_distance(DiscreteMeasure::dirac({0.0}), DiscreteMeasure::dirac({2.0}),
                             {1.0, 1.0, 1.0});
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_TRUE(r.plan.entries.empty());
  EXPECT_NEAR(r.removed_source_mass, 1.0, 1e-12);
}

TEST(Gw, ZeroMeasure) {
  const auto nu = line({{0.0, 1.5}, {4.0, 0.5}});
  EXPECT_NEAR(gw_distance(DiscreteMeasure(1), nu, {2.0, 1.0, 1.0}).value, 4.0, 1e-12);
  EXPECT_EQ(gw_distance(DiscreteMeasure(1), DiscreteMeasure(1), {}).value, 0.0);
  EXPECT_EQ(gw_distance(nu, nu, {1.0, 1.0, 2.0}).value, 0.0);
}

TEST(Gw, SplitExample) {
  const auto mu = line({{1.0, 2.0}});
  const auto nu = line({{0.0, 1.0}, {2.0, 1.0}});
  for (double a : {0.25, 0.5, 1.0, 3.0}) {
    for (double b : {0.5, 1.0, 2.0}) {
      const double expected = std::min({2.0 * b, 4.0 * a, b + 2.0 * a});
      EXPECT_NEAR(gw_distance(mu, nu, {a, b, 1.0}).value, expected, 1e-12);
    }
  }
}

TEST(Gw, InvalidInput) {
  const auto d = DiscreteMeasure::dirac({0.0});
  EXPECT_THROW(gw_distance(d, d, {0.0, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(gw_distance(d, d, {1.0, -1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(gw_distance(d, d, {1.0, 1.0, 0.5}), std::invalid_argument);
  EXPECT_THROW(gw_distance(d, DiscreteMeasure::dirac({0.0, 0.0}), {}), DimensionMismatch);
}

class BoxTest : public ::testing::TestWithParam<double> {};

TEST_P(BoxTest, MatchesClosedForm) {
  const double x = GetParam();
  const auto mu = oracle::box(-1.0, 200);
  const auto nu = oracle::box(x, 200);
  const double v = gw_distance(mu, nu, {1.0, 1.0, 1.0}).value;
  EXPECT_NEAR(v, oracle::box_value(x), 0.02);
  EXPECT_NEAR(gw_line_value(mu, nu, 1.0, 1.0), v, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Shifts, BoxTest, ::testing::Values(0.0, 0.5, 1.0, 1.5, 2.0, 3.0));

TEST(Gw, MatchesVertexEnumeration) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 300; ++t) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    const auto prm = random_params(rng);
    const auto mu = oracle::random_measure(rng, dim, 3);
    const auto nu = oracle::random_measure(rng, dim, 3, &mu);
    const double expected = oracle::gw_by_vertices(mu, nu, prm.a, prm.b, prm.p);
    EXPECT_NEAR(gw_distance(mu, nu, prm).value, expected, 1e-9 * std::max(1.0, expected))
        << "trial " << t;
  }
}

TEST(Gw, LineSolverMatchesNetworkSolver) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 300; ++t) {
    auto prm = random_params(rng);
    const auto mu = oracle::random_measure(rng, 1, 30);
    const auto nu = oracle::random_measure(rng, 1, 30, &mu);
    const double network = gw_distance(mu, nu, {prm.a, prm.b, 1.0}).value;
    EXPECT_NEAR(gw_line_value(mu, nu, prm.a, prm.b), network, 1e-9 * std::max(1.0, network))
        << "trial " << t;
  }
}

TEST(Gw, WitnessIsConsistent) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 200; ++t) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    const auto prm = random_params(rng);
    const auto mu = oracle::random_measure(rng, dim, 8);
    const auto nu = oracle::random_measure(rng, dim, 8, &mu);
    const auto r = gw_distance(mu, nu, prm);
    EXPECT_NEAR(r.recompute(prm), r.value, 1e-9 * std::max(1.0, r.value));
    const auto rows = r.plan.row_sums();
    const auto cols = r.plan.column_sums();
    // Plan indices refer to the compacted inputs.
    EXPECT_TRUE(same_measure(r.source, mu));
    EXPECT_TRUE(same_measure(r.target, nu));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_LE(rows[i], r.source.weight(i) + 1e-12);
      EXPECT_NEAR(rows[i], r.kept_source.weight(i), 1e-12);
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      EXPECT_LE(cols[j], r.target.weight(j) + 1e-12);
      EXPECT_NEAR(cols[j], r.kept_target.weight(j), 1e-12);
    }
    EXPECT_NEAR(r.removed_source_mass + r.plan.total_flow(), total_mass(mu), 1e-9);
    EXPECT_NEAR(r.removed_target_mass + r.plan.total_flow(), total_mass(nu), 1e-9);
    if (prm.p == 1.0) {
      EXPECT_LE(r.max_arc_length(), 2.0 * prm.a / prm.b + 1e-9);
    }
  }
}

TEST(Gw, LongArcsCanBeOptimalForPTwo) {
  // 4 delta_0 vs 4 delta_3, a = b = 1, p = 2: removing everything costs 8,
  // moving everything costs 4^{1/2} * 3 = 6 over a distance 3 > 2a/b.
  const auto r = gw_distance(DiscreteMeasure::dirac({0.0}, 4.0), DiscreteMeasure::dirac({3.0}, 4.0),
                             {1.0, 1.0, 2.0});
  EXPECT_NEAR(r.value, 6.0, 1e-12);
  EXPECT_NEAR(r.max_arc_length(), 3.0, 1e-12);
  EXPECT_NEAR(oracle::gw_by_vertices(DiscreteMeasure::dirac({0.0}, 4.0),
                                     DiscreteMeasure::dirac({3.0}, 4.0), 1.0, 1.0, 2.0),
              6.0, 1e-12);
}

TEST(Gw, BruteForceOracleAgrees) {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 200; ++t) {
    const int dim = 1 + static_cast<int>(rng() % 2);
    auto prm = random_params(rng);
    const auto mu = oracle::random_measure(rng, dim, 2, nullptr, 1);
    const auto nu = oracle::random_measure(rng, dim, 2, &mu, 1);
    const double solver = gw_distance(mu, nu, prm).value;
    const double grid = gw_brute_force(mu, nu, prm, 50);
    EXPECT_LE(solver, grid + 1e-9) << "trial " << t;
    EXPECT_LE(grid - solver, gw_brute_force_bound(mu, nu, prm, 50) + 1e-9) << "trial " << t;
  }
}

TEST(Gw, BruteForceLimits) {
  std::mt19937_64 rng(113);
  const auto big = oracle::random_measure(rng, 1, 5, nullptr, 5);
  EXPECT_THROW(gw_brute_force(big, big, {}, 10), std::length_error);
  const auto d = DiscreteMeasure::dirac({0.0});
  EXPECT_THROW(gw_brute_force(d, d, {}, 51), std::invalid_argument);
  EXPECT_NEAR(gw_brute_force(d, DiscreteMeasure::dirac({5.0}), {}, 50), 2.0, 1e-12);
}

TEST(Gw, MetricProperties) {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 200; ++t) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    const auto prm = random_params(rng);
    const auto mu = oracle::random_measure(rng, dim, 6);
    const auto nu = oracle::random_measure(rng, dim, 6, &mu);
    const auto rho = oracle::random_measure(rng, dim, 6, &nu);
    const double mn = gw_distance(mu, nu, prm).value;
    const double tol = 1e-9 * std::max(1.0, mn);
    EXPECT_NEAR(gw_distance(nu, mu, prm).value, mn, tol);
    EXPECT_LE(gw_distance(mu, rho, prm).value,
              mn + gw_distance(nu, rho, prm).value + 1e-9 * std::max(1.0, mn));
    EXPECT_GE(mn + tol, prm.a * std::abs(total_mass(mu) - total_mass(nu)));
    EXPECT_LE(mn, prm.a * (total_mass(mu) + total_mass(nu)) + tol);
  }
}

TEST(Gw, ValueDispatch) {
  std::mt19937_64 rng(131);
  const auto mu = oracle::random_measure(rng, 1, 20, nullptr, 1);
  const auto nu = oracle::random_measure(rng, 1, 20, &mu, 1);
  for (double p : {1.0, 2.0}) {
    const GwParams prm{0.7, 1.3, p};
    EXPECT_NEAR(gw_value(mu, nu, prm), gw_distance(mu, nu, prm).value, 1e-9);
  }
}

}  // namespace
}  // namespace gwass
