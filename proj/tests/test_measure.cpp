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

#include "gwass/measure.hpp"
#include "oracles.hpp"

namespace gwass {
namespace {

TEST(Measure, DiracAndMass) {
  auto mu = DiscreteMeasure::dirac({1.0, 2.0}, 0.5);
  EXPECT_EQ(mu.dim(), 2);
  EXPECT_EQ(mu.size(), 1u);
  EXPECT_DOUBLE_EQ(total_mass(mu), 0.5);
  EXPECT_DOUBLE_EQ(total_mass(DiscreteMeasure(3)), 0.0);
}

TEST(Measure, RejectsBadInput) {
  DiscreteMeasure mu(1);
  EXPECT_THROW(mu.add_atom({0.0}, -1.0), std::invalid_argument);
  EXPECT_THROW(mu.add_atom({NAN}, 1.0), std::invalid_argument);
  EXPECT_THROW(mu.add_atom({0.0, 1.0}, 1.0), DimensionMismatch);
  EXPECT_THROW(DiscreteMeasure(0), std::invalid_argument);
  EXPECT_THROW(DiscreteMeasure(2, {1.0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(scale(mu, -1.0), std::invalid_argument);
}

TEST(Measure, CompactMergesAndDropsZeros) {
  DiscreteMeasure mu(1);
  mu.add_atom({2.0}, 1.0);
  mu.add_atom({0.0}, 0.0);
  mu.add_atom({1.0}, 0.25);
  mu.add_atom({2.0}, 0.5);
  auto c = compact(mu);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.position(0)[0], 1.0);
  EXPECT_EQ(c.weight(1), 1.5);
}

TEST(Measure, CanonicalizeIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto mu = oracle::random_measure(rng, 2, 8);
    auto once = canonicalize(mu).measure;
    auto twice = canonicalize(once).measure;
    EXPECT_EQ(once, twice);
    EXPECT_NEAR(total_mass(once), total_mass(mu), 1e-12);
  }
}

TEST(Measure, TotalVariation) {
  auto d0 = DiscreteMeasure::dirac({0.0});
  auto d1 = DiscreteMeasure::dirac({1.0});
  EXPECT_EQ(tv_distance(d0, d1), 2.0);
  EXPECT_EQ(tv_distance(d0, d0), 0.0);
  // Positions within the lattice step count as the same site.
  EXPECT_EQ(tv_distance(d0, DiscreteMeasure::dirac({1e-12})), 0.0);
  EXPECT_THROW(tv_distance(d0, DiscreteMeasure::dirac({0.0, 0.0})), DimensionMismatch);
}

TEST(Measure, TotalVariationIsAMetric) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 3;
    auto a = oracle::random_measure(rng, dim, 6);
    auto b = oracle::random_measure(rng, dim, 6, &a);
    auto c = oracle::random_measure(rng, dim, 6, &b);
    EXPECT_NEAR(tv_distance(a, b), tv_distance(b, a), 1e-12);
    EXPECT_LE(tv_distance(a, c), tv_distance(a, b) + tv_distance(b, c) + 1e-12);
    EXPECT_EQ(tv_distance(a, a), 0.0);
    // Shifting far away makes the supports disjoint.
    auto far = push_forward(b, [](std::span<const double> x, std::span<double> out) {
      for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + 100.0;
    });
    EXPECT_NEAR(tv_distance(a, far), total_mass(a) + total_mass(b), 1e-12);
  }
}

TEST(Measure, SameMeasureIgnoresOrder) {
  DiscreteMeasure a(1), b(1);
  a.add_atom({0.0}, 1.0);
  a.add_atom({1.0}, 2.0);
  b.add_atom({1.0}, 1.5);
  b.add_atom({0.0}, 1.0);
  b.add_atom({1.0}, 0.5);
  EXPECT_TRUE(same_measure(a, b));
  EXPECT_FALSE(same_measure(a, scale(b, 2.0)));
}

TEST(Measure, AlgebraAndPushForward) {
  auto mu = DiscreteMeasure::dirac({1.0}, 2.0);
  auto nu = DiscreteMeasure::dirac({3.0}, 1.0);
  auto s = add(mu, nu);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(total_mass(scale(s, 0.5)), 1.5);
  auto moved = push_forward(s, [](std::span<const double> x, std::span<double> out) {
    out[0] = 2.0 * x[0];
  });
  EXPECT_EQ(moved.position(1)[0], 6.0);
  EXPECT_EQ(moved.weight(0), 2.0);
  auto right = restrict_to(s, [](std::span<const double> x) { return x[0] > 2.0; });
  EXPECT_EQ(right.size(), 1u);
  EXPECT_DOUBLE_EQ(support_radius(s), 3.0);
  EXPECT_THROW(add(mu, DiscreteMeasure(2)), DimensionMismatch);
}

}  // namespace
}  // namespace gwass
