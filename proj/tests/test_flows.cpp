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

#include "gwass/flows.hpp"
#include "oracles.hpp"

namespace gwass {
namespace {

VectorFieldModel constant_model(std::vector<double> c, GwParams prm = {}) {
  const int dim = static_cast<int>(c.size());
  return VectorFieldModel(BaseField::constant(std::move(c)), InteractionKernel::none(dim), 1.0, prm);
}

TEST(Flows, ConstantFieldTranslates) {
  const auto model = constant_model({0.3, -0.4});
  DiscreteMeasure mu(2);
  mu.add_atom({1.0, 1.0}, 0.5);
  mu.add_atom({-1.0, 2.0}, 1.5);
  const auto moved = flow_pushforward(model, mu, mu, 2.0, {});
  EXPECT_NEAR(moved.position(0)[0], 1.6, 1e-12);
  EXPECT_NEAR(moved.position(1)[1], 1.2, 1e-12);
  EXPECT_EQ(moved.weights()[1], 1.5);
  const double d = gw_distance(DiscreteMeasure::dirac({0.0, 0.0}),
                               flow_pushforward(model, DiscreteMeasure::dirac({0.0, 0.0}), mu, 2.0, {}),
                               {}).value;
  EXPECT_NEAR(d, 1.0, 1e-12);
}

TEST(Flows, SemigroupAndBackends) {
  std::mt19937_64 rng(501);
  BaseField base = BaseField::constant({0.2});
  base.waves.push_back({{0.5}, {2.0}, 0.3});
  VectorFieldModel model(base, InteractionKernel::repulsion(1, 0.5, 0.4), 10.0);
  const auto mu = oracle::random_measure(rng, 1, 30, nullptr, 5);
  FlowConfig serial{1e-2, kernels::Backend::kSerial};
  const auto whole = flow_pushforward(model, mu, mu, 0.6, serial);
  const auto halves =
      flow_pushforward(model, flow_pushforward(model, mu, mu, 0.3, serial), mu, 0.3, serial);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    EXPECT_NEAR(whole.position(i)[0], halves.position(i)[0], 1e-9);
  }
  EXPECT_EQ(whole, flow_pushforward(model, mu, mu, 0.6, FlowConfig{}));
  EXPECT_DOUBLE_EQ(total_mass(whole), total_mass(mu));
}

TEST(Flows, DisplacementIsBoundedBySpeed) {
  std::mt19937_64 rng(509);
  BaseField base = BaseField::constant({0.3, -0.2});
  base.waves.push_back({{0.4, 0.1}, {1.0, 3.0}, 0.2});
  VectorFieldModel model(base, InteractionKernel::repulsion(2, 0.6, 0.8), 25.0);
  const auto mu = oracle::random_measure(rng, 2, 20, nullptr, 10);
  const double t = 1.3;
  const auto moved = flow_pushforward(model, mu, mu, t, {});
  for (std::size_t i = 0; i < mu.size(); ++i) {
    EXPECT_LE(euclidean_distance(mu.position(i), moved.position(i)),
              t * model.constants().M + 1e-9);
  }
}

TEST(Flows, RejectsBadArguments) {
  const auto model = constant_model({1.0});
  const auto mu = DiscreteMeasure::dirac({0.0});
  EXPECT_THROW(flow_pushforward(model, mu, mu, -1.0, {}), std::invalid_argument);
  EXPECT_THROW(flow_pushforward(model, mu, mu, 1.0, {0.0}), std::invalid_argument);
  EXPECT_THROW(flow_pushforward(model, DiscreteMeasure::dirac({0.0, 0.0}), mu, 1.0, {}),
               DimensionMismatch);
}

TEST(Flows, EstimatesHoldOnRandomTrials) {
  std::mt19937_64 rng(503);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 40; ++t) {
    const int dim = 1 + t % 2;
    const GwParams prm{0.2 + 2.0 * u(rng), 0.2 + 3.0 * u(rng), t % 3 == 0 ? 2.0 : 1.0};
    auto field = [&](double shift) {
      BaseField base = BaseField::constant(std::vector<double>(static_cast<std::size_t>(dim), shift));
      base.waves.push_back({std::vector<double>(static_cast<std::size_t>(dim), 0.3),
                            std::vector<double>(static_cast<std::size_t>(dim), 1.0 + u(rng)), u(rng)});
      return base;
    };
    const auto mu = oracle::random_measure(rng, dim, 5, nullptr, 1);
    const auto nu = oracle::random_measure(rng, dim, 5, &mu, 1);
    const auto kernel = InteractionKernel::repulsion(dim, 0.7, 0.5);
    VectorFieldModel vm(field(0.4), kernel, 10.0, prm), wm(field(0.1), kernel, 10.0, prm);
    const auto v = vm.freeze(mu), w = wm.freeze(mu);
    const double time = 0.1 + u(rng);
    const auto r = flow_estimate_report(v, w, mu, nu, time, prm, {});
    EXPECT_TRUE(r.contraction.holds(1e-6)) << t << ' ' << r.contraction.lhs << ' ' << r.contraction.rhs;
    EXPECT_TRUE(r.displacement.holds(1e-6)) << t << ' ' << r.displacement.lhs << ' ' << r.displacement.rhs;
    EXPECT_TRUE(r.perturbation.holds(1e-6)) << t << ' ' << r.perturbation.lhs << ' ' << r.perturbation.rhs;
  }
}

TEST(Flows, DisplacementNeedsTheFactorB) {
  // delta_0 moved by c = 1 for t = 0.5 with a = 10, b = 3: the transport
  // costs b t = 1.5, more than t |v| |mu| = 0.5.
  const GwParams prm{10.0, 3.0, 1.0};
  const auto model = constant_model({1.0}, prm);
  const auto mu = DiscreteMeasure::dirac({0.0});
  const auto v = model.freeze(mu);
  const auto r = flow_estimate_report(v, v, mu, mu, 0.5, prm, {});
  EXPECT_NEAR(r.displacement.lhs, 1.5, 1e-12);
  EXPECT_GT(r.displacement.lhs, 0.5);
  EXPECT_TRUE(r.displacement.holds(1e-12));
}

TEST(Flows, PerturbationWithZeroLipschitzConstant) {
  const GwParams prm{10.0, 1.0, 1.0};
  const auto a = constant_model({1.0}, prm), b = constant_model({0.5}, prm);
  const auto mu = DiscreteMeasure::dirac({0.0}, 2.0);
  const auto r = flow_estimate_report(a.freeze(mu), b.freeze(mu), mu, mu, 1.0, prm, {});
  EXPECT_EQ(r.lipschitz, 0.0);
  EXPECT_NEAR(r.perturbation.lhs, 1.0, 1e-12);
  EXPECT_NEAR(r.perturbation.rhs, 1.0, 1e-12);
}

}  // namespace
}  // namespace gwass
