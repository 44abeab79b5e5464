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

// Per-element bodies shared by the serial and OpenMP kernels.

#ifndef GWASS_SRC_KERNELS_DETAIL_HPP_
#define GWASS_SRC_KERNELS_DETAIL_HPP_

#include <cmath>
#include <cstddef>
#include <span>

#include "gwass/kernels.hpp"

namespace gwass::kernels::detail {

inline double ground_cost(const double* x, const double* y, int dim, double p) {
  double s = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double d = x[k] - y[k];
    s += d * d;
  }
  if (p == 2.0) return s;
  const double r = std::sqrt(s);
  return p == 1.0 ? r : std::pow(r, p);
}

inline void cost_row(std::span<const double> xs, std::span<const double> ys,
                     int dim, double p, std::size_t i, std::span<double> out) {
  const auto d = static_cast<std::size_t>(dim);
  const std::size_t ny = ys.size() / d;
  const double* x = xs.data() + i * d;
  for (std::size_t j = 0; j < ny; ++j) {
    out[i * ny + j] = ground_cost(x, ys.data() + j * d, dim, p);
  }
}

// Classical fourth-order step, repeated `substeps` times on one point.
// `scratch` must hold 5 * dim doubles.
inline void rk4_point(const VelocityField& v, std::span<double> y, int substeps,
                      double h, std::span<double> scratch) {
  const auto d = y.size();
  auto k1 = scratch.subspan(0, d);
  auto k2 = scratch.subspan(d, d);
  auto k3 = scratch.subspan(2 * d, d);
  auto k4 = scratch.subspan(3 * d, d);
  auto tmp = scratch.subspan(4 * d, d);
  for (int s = 0; s < substeps; ++s) {
    v.evaluate(y, k1);
    for (std::size_t c = 0; c < d; ++c) tmp[c] = y[c] + 0.5 * h * k1[c];
    v.evaluate(tmp, k2);
    for (std::size_t c = 0; c < d; ++c) tmp[c] = y[c] + 0.5 * h * k2[c];
    v.evaluate(tmp, k3);
    for (std::size_t c = 0; c < d; ++c) tmp[c] = y[c] + h * k3[c];
    v.evaluate(tmp, k4);
    for (std::size_t c = 0; c < d; ++c) {
      y[c] += h * (k1[c] + 2.0 * (k2[c] + k3[c]) + k4[c]) / 6.0;
    }
  }
}

}  // namespace gwass::kernels::detail

#endif  // GWASS_SRC_KERNELS_DETAIL_HPP_
