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
// Measure-dependent velocity fields v[mu](x) = base(x) + sum_y w_y K(x - y).
//
// Constants for the convolution family, with |mu| <= mass_bound:
//   L = Lip(base) + Lip(K) mass_bound
//   M = sup|base| + sup|K| mass_bound
//   N = max(sup|K| / a, Lip(K) / b)
// N comes from splitting K * (mu - nu) over an optimal decomposition of
// gw(mu, nu) with p = 1: removed mass costs at most sup|K| per unit, and
// transported mass at most Lip(K) per unit of distance.

#ifndef GWASS_FIELDS_HPP_
#define GWASS_FIELDS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwass/gw.hpp"
#include "gwass/kernels.hpp"
#include "gwass/measure.hpp"

namespace gwass {

/// amplitude * sin(<frequency, x> + phase).
struct SineWave {
  std::vector<double> amplitude;
  std::vector<double> frequency;
  double phase = 0.0;
};

/// offset + linear_rate * x + sum of sine waves.
struct BaseField {
  std::vector<double> offset;
  double linear_rate = 0.0;
  std::vector<SineWave> waves;

  static BaseField constant(std::vector<double> c);

  int dim() const { return static_cast<int>(offset.size()); }
  void evaluate(std::span<const double> x, std::span<double> out) const;
  double lipschitz() const;
  /// Infinite when linear_rate != 0.
  double sup_bound() const;
  void validate() const;
};

enum class KernelKind { kNone, kBump, kRepulsion, kCustom };

/// Compactly supported interaction kernel K: R^d -> R^d.
///
/// bump:      height * direction * (1 - |z|^2/r^2)^2
/// repulsion: height * (z / r) * (1 - |z|^2/r^2)^2
/// both vanish for |z| >= r.
class InteractionKernel {
 public:
  using Function = std::function<void(std::span<const double>, std::span<double>)>;

  static InteractionKernel none(int dim);
  /// direction defaults to the first unit vector.
  static InteractionKernel bump(int dim, double radius, double height,
                                std::vector<double> direction = {});
  static InteractionKernel repulsion(int dim, double radius, double height);
  /// Throws unless both constants are given.
  static InteractionKernel custom(int dim, Function f, std::optional<double> sup,
                                  std::optional<double> lipschitz);

  KernelKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double radius() const { return radius_; }
  double height() const { return height_; }
  std::span<const double> direction() const { return direction_; }

  void evaluate(std::span<const double> z, std::span<double> out) const;
  double sup() const { return sup_; }
  double lipschitz() const { return lipschitz_; }

  /// For dim 1 and polynomial kinds: coefficients q_j with
  /// K(z) = sum_j q_j z^j on |z| < radius. Empty otherwise.
  std::vector<double> line_polynomial() const;

  bool same_as(const InteractionKernel& other) const;

 private:
  InteractionKernel() = default;

  KernelKind kind_ = KernelKind::kNone;
  int dim_ = 1;
  double radius_ = 0.0;
  double height_ = 0.0;
  std::vector<double> direction_;
  Function custom_;
  double sup_ = 0.0;
  double lipschitz_ = 0.0;
};

struct FieldConstants {
  double L = 0.0;  // spatial Lipschitz bound
  double M = 0.0;  // sup bound
  double N = 0.0;  // Lipschitz bound in mu with respect to gw
};

enum class FieldEvaluation { kAuto, kDirect, kMoments };

class FrozenField;

class VectorFieldModel {
 public:
  VectorFieldModel(BaseField base, InteractionKernel kernel, double mass_bound,
                   GwParams params = {});

  int dim() const { return base_.dim(); }
  const BaseField& base() const { return base_; }
  const InteractionKernel& kernel() const { return kernel_; }
  double mass_bound() const { return mass_bound_; }
  const GwParams& params() const { return params_; }
  const FieldConstants& constants() const { return constants_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// v[mu](x), summed directly over the atoms.
  void evaluate(const DiscreteMeasure& mu, std::span<const double> x,
                std::span<double> out) const;

  FrozenField freeze(const DiscreteMeasure& mu,
                     FieldEvaluation mode = FieldEvaluation::kAuto) const;

 private:
  BaseField base_;
  InteractionKernel kernel_;
  double mass_bound_;
  GwParams params_;
  FieldConstants constants_;
  std::vector<std::string> warnings_;
};

/// v[mu] for a fixed mu, as a plain velocity field.
///
/// In one dimension with a polynomial kernel the convolution is evaluated
/// from prefix sums of the moments w y^j over the sorted atoms, which costs
/// O(log n) per point instead of O(n).
class FrozenField final : public VelocityField {
 public:
  FrozenField(const VectorFieldModel& model, DiscreteMeasure frozen,
              FieldEvaluation mode = FieldEvaluation::kAuto);

  int dim() const override { return model_.dim(); }
  void evaluate(std::span<const double> x, std::span<double> out) const override;

  const VectorFieldModel& model() const { return model_; }
  const DiscreteMeasure& frozen() const { return frozen_; }
  bool uses_moments() const { return !poly_.empty(); }

  /// Constants of the model; valid when |frozen| <= mass_bound.
  double lipschitz() const { return model_.constants().L; }
  double sup_bound() const { return model_.constants().M; }
  bool within_mass_bound() const;

 private:
  double moment_sum(double x) const;

  VectorFieldModel model_;
  DiscreteMeasure frozen_;
  std::vector<double> poly_;
  double center_ = 0.0;
  std::vector<double> sorted_;               // atom positions minus center
  std::vector<std::vector<double>> prefix_;  // prefix_[j][i] = sum_{k<i} w u^j
};

/// v[mu](x) for a single point.
std::vector<double> evaluate_field(const VectorFieldModel& model,
                                   const DiscreteMeasure& mu,
                                   std::span<const double> x);

/// Upper bound on sup_x |v(x) - w(x)|. Exact when the fields differ only in
/// their constant offset; infinite when the linear rates differ.
double sup_distance_bound(const FrozenField& v, const FrozenField& w);

struct ConstantSpotCheck {
  double max_lipschitz_ratio = 0.0;  // max |v(x) - v(x')| / |x - x'|
  double max_speed = 0.0;            // max |v(x)|
  int samples = 0;
  bool within(const FieldConstants& c, double tol = 1e-9) const {
    return max_lipschitz_ratio <= c.L + tol && max_speed <= c.M + tol;
  }
};

/// Samples random point pairs in [-box, box]^d for every measure.
ConstantSpotCheck spot_check_constants(const VectorFieldModel& model,
                                       std::span<const DiscreteMeasure> measures,
                                       std::uint64_t seed, int pairs, double box);

}  // namespace gwass

#endif  // GWASS_FIELDS_HPP_
