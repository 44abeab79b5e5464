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

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::parallel`; the two
// perform the same floating-point operations per output element, so their
// results agree bit for bit. Tests compare them, bench/ times them.

#ifndef GWASS_KERNELS_HPP_
#define GWASS_KERNELS_HPP_

#include <span>

namespace gwass {

/// A time-independent velocity field on R^d.
class VelocityField {
 public:
  virtual ~VelocityField() = default;
  virtual int dim() const = 0;
  virtual void evaluate(std::span<const double> x, std::span<double> out) const = 0;
};

namespace kernels {

enum class Backend { kSerial, kParallel };

namespace serial {

/// out[i * ny + j] = |x_i - y_j|^p.
void pairwise_cost(std::span<const double> xs, std::span<const double> ys,
                   int dim, double p, std::span<double> out);

/// out[i] = v(points[i]) for every point.
void evaluate_field(const VelocityField& v, std::span<const double> points,
                    std::span<double> out);

/// Moves every point along x' = v(x) for time t with classical RK4 and
/// ceil(t / step) equal substeps.
void integrate_rk4(const VelocityField& v, std::span<double> points, double t,
                   double step);

}  // namespace serial

namespace parallel {

void pairwise_cost(std::span<const double> xs, std::span<const double> ys,
                   int dim, double p, std::span<double> out);
void evaluate_field(const VelocityField& v, std::span<const double> points,
                    std::span<double> out);
void integrate_rk4(const VelocityField& v, std::span<double> points, double t,
                   double step);

}  // namespace parallel

inline void pairwise_cost(Backend b, std::span<const double> xs,
                          std::span<const double> ys, int dim, double p,
                          std::span<double> out) {
  b == Backend::kSerial ? serial::pairwise_cost(xs, ys, dim, p, out)
                        : parallel::pairwise_cost(xs, ys, dim, p, out);
}

inline void evaluate_field(Backend b, const VelocityField& v,
                           std::span<const double> points,
                           std::span<double> out) {
  b == Backend::kSerial ? serial::evaluate_field(v, points, out)
                        : parallel::evaluate_field(v, points, out);
}

inline void integrate_rk4(Backend b, const VelocityField& v,
                          std::span<double> points, double t, double step) {
  b == Backend::kSerial ? serial::integrate_rk4(v, points, t, step)
                        : parallel::integrate_rk4(v, points, t, step);
}

/// Number of RK4 substeps used for horizon t with nominal step `step`.
int rk4_substeps(double t, double step);

}  // namespace kernels
}  // namespace gwass

#endif  // GWASS_KERNELS_HPP_
