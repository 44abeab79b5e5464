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

#ifndef GWASS_MEASURE_HPP_
#define GWASS_MEASURE_HPP_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwass {

/// Raised when two measures that must live in the same space do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int lhs, int rhs);
};

/// Default lattice step used when comparing atom positions.
inline constexpr double kDefaultQuantum = 1e-9;

/// A finite nonnegative weighted cloud of atoms in R^d.
///
/// Positions are stored row-major in one flat buffer (atom i occupies
/// `[i * dim, (i + 1) * dim)`), which is the layout the numerical kernels
/// consume directly. Atom order carries no meaning.
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(int dim = 1);
  DiscreteMeasure(int dim, std::vector<double> positions,
                  std::vector<double> weights);

  /// w * delta_x.
  static DiscreteMeasure dirac(std::initializer_list<double> x, double w = 1.0);
  static DiscreteMeasure dirac(std::span<const double> x, double w = 1.0);

  int dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  std::span<const double> position(std::size_t i) const {
    return {positions_.data() + i * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }
  double weight(std::size_t i) const { return weights_[i]; }

  std::span<const double> positions() const { return positions_; }
  std::span<const double> weights() const { return weights_; }

  void add_atom(std::span<const double> x, double w);
  void add_atom(std::initializer_list<double> x, double w);

  /// Replaces the weights wholesale; size must match.
  DiscreteMeasure with_weights(std::vector<double> weights) const;

  /// Mutable access for in-place kernels (pushforward integrators).
  std::vector<double>& mutable_positions() { return positions_; }

  friend bool operator==(const DiscreteMeasure&,
                         const DiscreteMeasure&) = default;

 private:
  int dim_;
  std::vector<double> positions_;
  std::vector<double> weights_;
};

using PointMap = std::function<void(std::span<const double> x,
                                    std::span<double> out)>;

double total_mass(const DiscreteMeasure& mu);

DiscreteMeasure scale(const DiscreteMeasure& mu, double k);
DiscreteMeasure add(const DiscreteMeasure& mu, const DiscreteMeasure& nu);
DiscreteMeasure restrict_to(const DiscreteMeasure& mu,
                            const std::function<bool(std::span<const double>)>&
                                predicate);
DiscreteMeasure push_forward(const DiscreteMeasure& mu, const PointMap& gamma);

/// Sorts atoms lexicographically, merges exactly coincident positions and
/// drops zero weights. Positions are not moved.
DiscreteMeasure compact(const DiscreteMeasure& mu);

/// Deduplicated measure with positions snapped to a lattice of step `quantum`.
struct CanonicalForm {
  double quantum;
  DiscreteMeasure measure;
};

/// Idempotent; preserves total mass up to summation order.
CanonicalForm canonicalize(const DiscreteMeasure& mu,
                           double quantum = kDefaultQuantum);

/// |mu - nu| evaluated sitewise on the quantization lattice.
double tv_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                   double quantum = kDefaultQuantum);

/// Canonical forms agree site by site with weights within `weight_tol`.
bool same_measure(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                  double quantum = kDefaultQuantum, double weight_tol = 1e-12);

double euclidean_distance(std::span<const double> x, std::span<const double> y);

/// Largest Euclidean norm of an atom position; 0 for the zero measure.
double support_radius(const DiscreteMeasure& mu);

}  // namespace gwass

#endif  // GWASS_MEASURE_HPP_
