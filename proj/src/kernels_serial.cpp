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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gwass/kernels.hpp"
#include "kernels_detail.hpp"

namespace gwass::kernels {

int rk4_substeps(double t, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("ode step must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("flow time must be nonnegative");
  if (t == 0.0) return 0;
  // Guard against t/step landing a hair above an integer.
  return static_cast<int>(std::ceil(t / step * (1.0 - 1e-12)));
}

namespace serial {

void pairwise_cost(std::span<const double> xs, std::span<const double> ys,
                   int dim, double p, std::span<double> out) {
  const auto nx = xs.size() / static_cast<std::size_t>(dim);
  for (std::size_t i = 0; i < nx; ++i) detail::cost_row(xs, ys, dim, p, i, out);
}

void evaluate_field(const VelocityField& v, std::span<const double> points,
                    std::span<double> out) {
  const auto d = static_cast<std::size_t>(v.dim());
  const std::size_t n = points.size() / d;
  for (std::size_t i = 0; i < n; ++i) {
    v.evaluate(points.subspan(i * d, d), out.subspan(i * d, d));
  }
}

void integrate_rk4(const VelocityField& v, std::span<double> points, double t,
                   double step) {
  const int substeps = rk4_substeps(t, step);
  if (substeps == 0) return;
  const double h = t / substeps;
  const auto d = static_cast<std::size_t>(v.dim());
  const std::size_t n = points.size() / d;
  std::vector<double> scratch(5 * d);
  for (std::size_t i = 0; i < n; ++i) {
    detail::rk4_point(v, points.subspan(i * d, d), substeps, h, scratch);
  }
}

}  // namespace serial
}  // namespace gwass::kernels
