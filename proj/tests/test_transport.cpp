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
#include <random>

#include "gwass/gw.hpp"
#include "gwass/min_cost_flow.hpp"
#include "gwass/transport.hpp"
#include "oracles.hpp"

namespace gwass {
namespace {

DiscreteMeasure line(std::initializer_list<std::pair<double, double>> atoms) {
  DiscreteMeasure mu(1);
  for (auto [x, w] : atoms) mu.add_atom({x}, w);
  return mu;
}

TEST(Transport, DiracDistance) {
  for (double p : {1.0, 2.0, 3.0}) {
    auto r = wasserstein(DiscreteMeasure::dirac({0.0}), DiscreteMeasure::dirac({1.7}), p);
    EXPECT_NEAR(r.value, 1.7, 1e-12) << p;
  }
}

TEST(Transport, SplitsAnAtom) {
  auto r = wasserstein(line({{1.0, 2.0}}), line({{0.0, 1.0}, {2.0, 1.0}}), 1.0);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_EQ(r.plan.entries.size(), 2u);
  EXPECT_TRUE(r.certificate.certifies(1e-9));
}

TEST(Transport, UnnormalizedScaling) {
  auto r = wasserstein(DiscreteMeasure::dirac({0.0}, 4.0), DiscreteMeasure::dirac({3.0}, 4.0), 2.0);
  EXPECT_NEAR(r.value, 6.0, 1e-12);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto mu = oracle::random_measure(rng, 2, 5, nullptr, 1);
    auto nu = scale(oracle::random_measure(rng, 2, 5, nullptr, 1), 1.0);
    nu = scale(nu, total_mass(mu) / total_mass(nu));
    auto [lhs, rhs] = wasserstein_scaling_check(mu, nu, 3.5, 2.0);
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, rhs));
  }
}

TEST(Transport, MassMismatchThrows) {
  EXPECT_THROW(wasserstein(DiscreteMeasure::dirac({0.0}, 1.0), DiscreteMeasure::dirac({0.0}, 2.0), 1.0),
               MassMismatch);
  EXPECT_THROW(wasserstein(DiscreteMeasure::dirac({0.0}), DiscreteMeasure::dirac({0.0, 0.0}), 1.0),
               DimensionMismatch);
}

TEST(Transport, MatchesQuantileOracleOnTheLine) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    auto mu = oracle::random_measure(rng, 1, 12, nullptr, 1);
    auto nu = oracle::random_measure(rng, 1, 12, &mu, 1);
    nu = scale(nu, total_mass(mu) / total_mass(nu));
    const double p = t % 3 == 0 ? 1.0 : (t % 3 == 1 ? 2.0 : 1.5);
    auto r = wasserstein(mu, nu, p);
    EXPECT_NEAR(r.value, oracle::wp_line(mu, nu, p), 1e-9) << "trial " << t;
    EXPECT_TRUE(r.certificate.certifies(1e-8)) << "trial " << t;
  }
}

TEST(Transport, PlanHasTheRightMarginals) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    auto mu = oracle::random_measure(rng, 3, 9, nullptr, 1);
    auto nu = oracle::random_measure(rng, 3, 9, &mu, 1);
    nu = scale(nu, total_mass(mu) / total_mass(nu));
    auto r = wasserstein(mu, nu, 2.0);
    auto rows = r.plan.row_sums();
    auto cols = r.plan.column_sums();
    for (std::size_t i = 0; i < mu.size(); ++i) EXPECT_NEAR(rows[i], mu.weight(i), 1e-9);
    for (std::size_t j = 0; j < nu.size(); ++j) EXPECT_NEAR(cols[j], nu.weight(j), 1e-9);
    EXPECT_NEAR(std::pow(plan_cost(r.plan, mu, nu, 2.0), 0.5), r.value, 1e-9);
    EXPECT_LE(r.certificate.max_infeasibility, 1e-9);
    EXPECT_NEAR(r.certificate.primal, r.certificate.dual, 1e-8 * std::max(1.0, r.certificate.primal));
  }
}

TEST(Transport, MatchesVertexEnumerationInThePlane) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    auto mu = oracle::random_measure(rng, 2, 3, nullptr, 1);
    auto nu = oracle::random_measure(rng, 2, 3, nullptr, 1);
    nu = scale(nu, total_mass(mu) / total_mass(nu));
    const double p = t % 2 ? 2.0 : 1.0;
    const double expected = oracle::wp_by_vertices(mu, nu, p);
    EXPECT_NEAR(wasserstein(mu, nu, p).value, expected, 1e-9) << "trial " << t;
  }
}

TEST(Transport, MetricAxioms) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const int dim = 1 + t % 3;
    const double p = t % 2 ? 2.0 : 1.0;
    auto mu = oracle::random_measure(rng, dim, 10, nullptr, 1);
    auto nu = oracle::random_measure(rng, dim, 10, &mu, 1);
    auto rho = oracle::random_measure(rng, dim, 10, &nu, 1);
    nu = scale(nu, total_mass(mu) / total_mass(nu));
    rho = scale(rho, total_mass(mu) / total_mass(rho));
    const double mn = wasserstein(mu, nu, p).value;
    EXPECT_EQ(mn, wasserstein(nu, mu, p).value) << "trial " << t;
    EXPECT_LE(wasserstein(mu, rho, p).value, mn + wasserstein(nu, rho, p).value + 1e-9);
    EXPECT_NEAR(wasserstein(mu, mu, p).value, 0.0, 1e-12);
  }
}

TEST(ParametricTransport, SlopesAreNondecreasing) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    auto mu = oracle::random_measure(rng, 2, 7, nullptr, 1);
    auto nu = oracle::random_measure(rng, 2, 7, &mu, 1);
    auto segs = transported_mass_profile(mu, nu, 1.0);
    double moved = 0.0, prev = 0.0;
    for (const auto& s : segs) {
      EXPECT_GE(s.slope, prev - 1e-12);
      EXPECT_GT(s.amount, 0.0);
      prev = s.slope;
      moved += s.amount;
    }
    EXPECT_NEAR(moved, std::min(total_mass(mu), total_mass(nu)), 1e-9);
  }
}

TEST(ParametricTransport, StopsAtTheSlopeLimit) {
  std::vector<double> supply{1.0, 1.0}, demand{1.0, 1.0};
  std::vector<ParametricTransport::Arc> arcs{{0, 0, 0.5}, {1, 1, 3.0}};
  ParametricTransport pt(supply, demand, arcs);
  auto first = pt.augment(2.0);
  ASSERT_TRUE(first);
  EXPECT_DOUBLE_EQ(first->slope, 0.5);
  EXPECT_FALSE(pt.augment(2.0));
  auto second = pt.augment();
  ASSERT_TRUE(second);
  EXPECT_DOUBLE_EQ(second->slope, 3.0);
  EXPECT_DOUBLE_EQ(pt.cost(), 3.5);
  EXPECT_FALSE(pt.augment());
  std::vector<ParametricTransport::Arc> bad{{0, 5, 1.0}};
  EXPECT_THROW(ParametricTransport(supply, demand, bad), std::out_of_range);
}

}  // namespace
}  // namespace gwass
