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

#include <cstdint>
#include <vector>

#include "gwass/kernels.hpp"
#include "kernels_detail.hpp"

namespace gwass::kernels::parallel {

void pairwise_cost(std::span<const double> xs, std::span<const double> ys,
                   int dim, double p, std::span<double> out) {
  const auto nx = static_cast<std::int64_t>(xs.size() / static_cast<std::size_t>(dim));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nx; ++i) {
    detail::cost_row(xs, ys, dim, p, static_cast<std::size_t>(i), out);
  }
}

void evaluate_field(const VelocityField& v, std::span<const double> points,
                    std::span<double> out) {
  const auto d = static_cast<std::size_t>(v.dim());
  const auto n = static_cast<std::int64_t>(points.size() / d);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    v.evaluate(points.subspan(k * d, d), out.subspan(k * d, d));
  }
}

void integrate_rk4(const VelocityField& v, std::span<double> points, double t,
                   double step) {
  const int substeps = rk4_substeps(t, step);
  if (substeps == 0) return;
  const double h = t / substeps;
  const auto d = static_cast<std::size_t>(v.dim());
  const auto n = static_cast<std::int64_t>(points.size() / d);
#pragma omp parallel
  {
    std::vector<double> scratch(5 * d);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      detail::rk4_point(v, points.subspan(k * d, d), substeps, h, scratch);
    }
  }
}

}  // namespace gwass::kernels::parallel
