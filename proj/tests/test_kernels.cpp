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
#include <omp.h>

#include <cmath>
#include <random>
#include <vector>

#include "gwass/fields.hpp"
#include "gwass/kernels.hpp"
#include "oracles.hpp"

namespace gwass {
namespace {

std::vector<double> random_points(std::mt19937_64& rng, std::size_t n, int dim) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> xs(n * static_cast<std::size_t>(dim));
  for (auto& x : xs) x = u(rng);
  return xs;
}

class KernelsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    threads_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(threads_); }
  int threads_ = 1;
};

TEST_F(KernelsTest, PairwiseCostIsBitwiseEqual) {
  std::mt19937_64 rng(301);
  for (int dim : {1, 2, 3}) {
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const auto xs = random_points(rng, 37, dim);
      const auto ys = random_points(rng, 23, dim);
      std::vector<double> a(37 * 23), b(37 * 23);
      kernels::serial::pairwise_cost(xs, ys, dim, p, a);
      kernels::parallel::pairwise_cost(xs, ys, dim, p, b);
      EXPECT_EQ(a, b);
      const double d = euclidean_distance(std::span(xs).subspan(0, dim),
                                          std::span(ys).subspan(0, dim));
      EXPECT_NEAR(a[0], std::pow(d, p), 1e-12 * std::max(1.0, a[0]));
    }
  }
}

FrozenField sample_field(std::mt19937_64& rng, int dim, FieldEvaluation mode) {
  BaseField base = BaseField::constant(std::vector<double>(static_cast<std::size_t>(dim), 0.3));
  base.waves.push_back({std::vector<double>(static_cast<std::size_t>(dim), 0.2),
                        std::vector<double>(static_cast<std::size_t>(dim), 1.5), 0.4});
  VectorFieldModel model(base, InteractionKernel::repulsion(dim, 0.8, 0.5), 10.0);
  return model.freeze(oracle::random_measure(rng, dim, 40, nullptr, 20), mode);
}

TEST_F(KernelsTest, FieldEvaluationAndRk4AreBitwiseEqual) {
  std::mt19937_64 rng(307);
  for (int dim : {1, 2}) {
    const auto field = sample_field(rng, dim, FieldEvaluation::kAuto);
    const auto pts = random_points(rng, 101, dim);
    std::vector<double> a(pts.size()), b(pts.size());
    kernels::serial::evaluate_field(field, pts, a);
    kernels::parallel::evaluate_field(field, pts, b);
    EXPECT_EQ(a, b);
    auto ya = pts, yb = pts;
    kernels::serial::integrate_rk4(field, ya, 0.7, 0.05);
    kernels::parallel::integrate_rk4(field, yb, 0.7, 0.05);
    EXPECT_EQ(ya, yb);
  }
}

class Linear final : public VelocityField {
 public:
  int dim() const override { return 1; }
  void evaluate(std::span<const double> x, std::span<double> out) const override {
    out[0] = x[0];
  }
};

TEST(Kernels, Rk4OnALinearField) {
  std::vector<double> y{1.0, -2.0};
  kernels::integrate_rk4(kernels::Backend::kSerial, Linear{}, y, 1.0, 0.01);
  // One RK4 step of x' = x multiplies by the degree-4 Taylor polynomial of e^h.
  const double h = 0.01;
  const double factor = std::pow(1.0 + h + h * h / 2.0 + h * h * h / 6.0 + h * h * h * h / 24.0, 100);
  EXPECT_NEAR(y[0], factor, 1e-13);
  EXPECT_NEAR(y[1], -2.0 * factor, 2e-13);
  EXPECT_NEAR(y[0], std::exp(1.0), 1e-9);
}

TEST(Kernels, Substeps) {
  EXPECT_EQ(kernels::rk4_substeps(0.0, 0.1), 0);
  EXPECT_EQ(kernels::rk4_substeps(1.0, 0.1), 10);
  EXPECT_EQ(kernels::rk4_substeps(0.3, 0.1), 3);
  EXPECT_EQ(kernels::rk4_substeps(0.31, 0.1), 4);
  EXPECT_THROW(kernels::rk4_substeps(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(kernels::rk4_substeps(-1.0, 0.1), std::invalid_argument);
}

TEST(Kernels, MomentsMatchDirectSummation) {
  std::mt19937_64 rng(311);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto kernel = trial % 2 ? InteractionKernel::bump(1, 0.3 + 0.1 * trial, -0.7)
                                  : InteractionKernel::repulsion(1, 0.2 + 0.1 * trial, 1.3);
    VectorFieldModel model(BaseField::constant({0.1}), kernel, 100.0);
    const auto mu = oracle::random_measure(rng, 1, 200, nullptr, 16);
    const auto fast = model.freeze(mu, FieldEvaluation::kMoments);
    const auto slow = model.freeze(mu, FieldEvaluation::kDirect);
    ASSERT_TRUE(fast.uses_moments());
    ASSERT_FALSE(slow.uses_moments());
    for (int s = 0; s < 200; ++s) {
      // Include points exactly one radius away from an atom.
      const double x = s % 10 == 0 ? mu.position(static_cast<std::size_t>(s) % mu.size())[0] +
                                         kernel.radius()
                                   : u(rng);
      double vf = 0.0, vs = 0.0;
      fast.evaluate(std::span(&x, 1), std::span(&vf, 1));
      slow.evaluate(std::span(&x, 1), std::span(&vs, 1));
      EXPECT_NEAR(vf, vs, 1e-10 * std::max(1.0, total_mass(mu))) << "trial " << trial << " x " << x;
    }
  }
}

}  // namespace
}  // namespace gwass
