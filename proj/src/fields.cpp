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
#include "gwass/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gwass {

namespace {

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// max |d/ds (1 - s^2)^2| on [0, 1], attained at s = 1/sqrt(3).
const double kBumpSlope = 8.0 / (3.0 * std::sqrt(3.0));
// max s (1 - s^2)^2 on [0, 1], attained at s = 1/sqrt(5).
const double kRepulsionPeak = 16.0 / (25.0 * std::sqrt(5.0));

constexpr std::size_t kMomentThreshold = 16;

}  // namespace

BaseField BaseField::constant(std::vector<double> c) {
  BaseField f;
  f.offset = std::move(c);
  return f;
}

void BaseField::evaluate(std::span<const double> x, std::span<double> out) const {
  for (std::size_t c = 0; c < offset.size(); ++c) out[c] = offset[c] + linear_rate * x[c];
  for (const auto& w : waves) {
    const double s = std::sin(dot(w.frequency, x) + w.phase);
    for (std::size_t c = 0; c < offset.size(); ++c) out[c] += w.amplitude[c] * s;
  }
}

double BaseField::lipschitz() const {
  double l = std::abs(linear_rate);
  for (const auto& w : waves) l += norm(w.amplitude) * norm(w.frequency);
  return l;
}

double BaseField::sup_bound() const {
  if (linear_rate != 0.0) return std::numeric_limits<double>::infinity();
  double m = norm(offset);
  for (const auto& w : waves) m += norm(w.amplitude);
  return m;
}

void BaseField::validate() const {
  if (offset.empty()) throw std::invalid_argument("base field needs an offset vector");
  for (const auto& w : waves) {
    if (w.amplitude.size() != offset.size() || w.frequency.size() != offset.size()) {
      throw std::invalid_argument("sine wave vectors must match the field dimension");
    }
  }
}

InteractionKernel InteractionKernel::none(int dim) {
  InteractionKernel k;
  k.dim_ = dim;
  return k;
}

InteractionKernel InteractionKernel::bump(int dim, double radius, double height,
                                          std::vector<double> direction) {
  if (!(radius > 0.0)) throw std::invalid_argument("kernel radius must be positive");
  if (direction.empty()) {
    direction.assign(static_cast<std::size_t>(dim), 0.0);
    direction[0] = 1.0;
  }
  if (direction.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("kernel direction must match the dimension");
  }
  InteractionKernel k;
  k.kind_ = KernelKind::kBump;
  k.dim_ = dim;
  k.radius_ = radius;
  k.height_ = height;
  k.direction_ = std::move(direction);
  const double scale = std::abs(height) * norm(k.direction_);
  k.sup_ = scale;
  k.lipschitz_ = scale * kBumpSlope / radius;
  return k;
}

InteractionKernel InteractionKernel::repulsion(int dim, double radius, double height) {
  if (!(radius > 0.0)) throw std::invalid_argument("kernel radius must be positive");
  InteractionKernel k;
  k.kind_ = KernelKind::kRepulsion;
  k.dim_ = dim;
  k.radius_ = radius;
  k.height_ = height;
  k.sup_ = std::abs(height) * kRepulsionPeak;
  // The Jacobian is symmetric with eigenvalues (phi and phi + s phi') / r,
  // both bounded by 1 in absolute value.
  k.lipschitz_ = std::abs(height) / radius;
  return k;
}

InteractionKernel InteractionKernel::custom(int dim, Function f,
                                            std::optional<double> sup,
                                            std::optional<double> lipschitz) {
  if (!sup || !lipschitz || !(*sup >= 0.0) || !(*lipschitz >= 0.0)) {
    throw std::invalid_argument(
        "custom kernel needs explicit nonnegative sup and Lipschitz constants");
  }
  if (!f) throw std::invalid_argument("custom kernel needs a function");
  InteractionKernel k;
  k.kind_ = KernelKind::kCustom;
  k.dim_ = dim;
  k.custom_ = std::move(f);
  k.sup_ = *sup;
  k.lipschitz_ = *lipschitz;
  return k;
}

void InteractionKernel::evaluate(std::span<const double> z, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  switch (kind_) {
    case KernelKind::kNone:
      return;
    case KernelKind::kCustom:
      custom_(z, out);
      return;
    case KernelKind::kBump:
    case KernelKind::kRepulsion: {
      double s2 = 0.0;
      for (double c : z) s2 += c * c;
      s2 /= radius_ * radius_;
      if (s2 >= 1.0) return;
      const double phi = (1.0 - s2) * (1.0 - s2) * height_;
      if (kind_ == KernelKind::kBump) {
        for (std::size_t c = 0; c < out.size(); ++c) out[c] = phi * direction_[c];
      } else {
        for (std::size_t c = 0; c < out.size(); ++c) out[c] = phi * z[c] / radius_;
      }
      return;
    }
  }
}

std::vector<double> InteractionKernel::line_polynomial() const {
  if (dim_ != 1) return {};
  const double r2 = radius_ * radius_;
  if (kind_ == KernelKind::kBump) {
    const double c = height_ * direction_[0];
    return {c, 0.0, -2.0 * c / r2, 0.0, c / (r2 * r2)};
  }
  if (kind_ == KernelKind::kRepulsion) {
    const double c = height_ / radius_;
    return {0.0, c, 0.0, -2.0 * c / r2, 0.0, c / (r2 * r2)};
  }
  return {};
}

bool InteractionKernel::same_as(const InteractionKernel& other) const {
  if (kind_ == KernelKind::kCustom || other.kind_ == KernelKind::kCustom) return false;
  return kind_ == other.kind_ && dim_ == other.dim_ && radius_ == other.radius_ &&
         height_ == other.height_ && direction_ == other.direction_;
}

VectorFieldModel::VectorFieldModel(BaseField base, InteractionKernel kernel,
                                   double mass_bound, GwParams params)
    : base_(std::move(base)), kernel_(std::move(kernel)),
      mass_bound_(mass_bound), params_(params) {
  base_.validate();
  params_.validate();
  if (kernel_.dim() != base_.dim()) {
    throw DimensionMismatch(base_.dim(), kernel_.dim());
  }
  if (!(mass_bound >= 0.0) || !std::isfinite(mass_bound)) {
    throw std::invalid_argument("mass bound must be finite and nonnegative");
  }
  constants_.L = base_.lipschitz() + kernel_.lipschitz() * mass_bound_;
  constants_.M = base_.sup_bound() + kernel_.sup() * mass_bound_;
  constants_.N = std::max(kernel_.sup() / params_.a, kernel_.lipschitz() / params_.b);
  if (params_.p != 1.0) {
    warnings_.push_back("the certified constant N assumes p = 1");
  }
  if (!std::isfinite(constants_.M)) {
    warnings_.push_back("base field is unbounded; M is infinite");
  }
}

void VectorFieldModel::evaluate(const DiscreteMeasure& mu, std::span<const double> x,
                                std::span<double> out) const {
  if (mu.dim() != dim()) throw DimensionMismatch(dim(), mu.dim());
  base_.evaluate(x, out);
  if (kernel_.kind() == KernelKind::kNone) return;
  const auto d = static_cast<std::size_t>(dim());
  std::vector<double> z(d), k(d);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    auto y = mu.position(i);
    for (std::size_t c = 0; c < d; ++c) z[c] = x[c] - y[c];
    kernel_.evaluate(z, k);
    for (std::size_t c = 0; c < d; ++c) out[c] += mu.weight(i) * k[c];
  }
}

FrozenField VectorFieldModel::freeze(const DiscreteMeasure& mu, FieldEvaluation mode) const {
  return FrozenField(*this, mu, mode);
}

FrozenField::FrozenField(const VectorFieldModel& model, DiscreteMeasure frozen,
                         FieldEvaluation mode)
    : model_(model), frozen_(std::move(frozen)) {
  if (frozen_.dim() != model_.dim()) throw DimensionMismatch(model_.dim(), frozen_.dim());
  auto poly = model_.kernel().line_polynomial();
  const bool want = mode == FieldEvaluation::kMoments ||
                    (mode == FieldEvaluation::kAuto && frozen_.size() >= kMomentThreshold);
  if (!want || poly.empty()) {
    if (mode == FieldEvaluation::kMoments && poly.empty()) {
      throw std::invalid_argument("moment evaluation needs a polynomial kernel on the line");
    }
    return;
  }
  poly_ = std::move(poly);

  const std::size_t n = frozen_.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return frozen_.position(i)[0] < frozen_.position(j)[0];
  });
  if (n > 0) {
    center_ = 0.5 * (frozen_.position(order.front())[0] + frozen_.position(order.back())[0]);
  }
  sorted_.resize(n);
  prefix_.assign(poly_.size(), std::vector<double>(n + 1, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double u = frozen_.position(order[k])[0] - center_;
    sorted_[k] = u;
    double term = frozen_.weight(order[k]);
    for (std::size_t j = 0; j < poly_.size(); ++j) {
      prefix_[j][k + 1] = prefix_[j][k] + term;
      term *= u;
    }
  }
}

bool FrozenField::within_mass_bound() const {
  return total_mass(frozen_) <= model_.mass_bound() * (1.0 + 1e-12);
}

// sum_{|x-u|<r} w q(x - u), expanded in powers of u around the center.
double FrozenField::moment_sum(double x) const {
  const double xc = x - center_;
  const double r = model_.kernel().radius();
  const auto lo = static_cast<std::size_t>(
      std::upper_bound(sorted_.begin(), sorted_.end(), xc - r) - sorted_.begin());
  const auto hi = static_cast<std::size_t>(
      std::lower_bound(sorted_.begin(), sorted_.end(), xc + r) - sorted_.begin());
  if (hi <= lo) return 0.0;
  const std::size_t deg = poly_.size();
  double total = 0.0;
  for (std::size_t l = 0; l < deg; ++l) {
    // A_l = sum_{j>=l} q_j C(j, l) xc^{j-l}
    double a = 0.0;
    double power = 1.0;
    for (std::size_t j = l; j < deg; ++j) {
      double c = 1.0;
      for (std::size_t t = 0; t < l; ++t) c = c * static_cast<double>(j - t) / static_cast<double>(t + 1);
      a += poly_[j] * c * power;
      power *= xc;
    }
    const double moment = prefix_[l][hi] - prefix_[l][lo];
    total += (l % 2 == 0 ? 1.0 : -1.0) * a * moment;
  }
  return total;
}

void FrozenField::evaluate(std::span<const double> x, std::span<double> out) const {
  if (poly_.empty()) {
    model_.evaluate(frozen_, x, out);
    return;
  }
  model_.base().evaluate(x, out);
  out[0] += moment_sum(x[0]);
}

std::vector<double> evaluate_field(const VectorFieldModel& model,
                                   const DiscreteMeasure& mu,
                                   std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(model.dim())) {
    throw DimensionMismatch(model.dim(), static_cast<int>(x.size()));
  }
  std::vector<double> out(x.size());
  model.evaluate(mu, x, out);
  return out;
}

double sup_distance_bound(const FrozenField& v, const FrozenField& w) {
  const BaseField& bv = v.model().base();
  const BaseField& bw = w.model().base();
  if (bv.dim() != bw.dim()) throw DimensionMismatch(bv.dim(), bw.dim());
  if (bv.linear_rate != bw.linear_rate) return std::numeric_limits<double>::infinity();

  std::vector<double> diff(bv.offset.size());
  for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = bv.offset[c] - bw.offset[c];
  double bound = norm(diff);
  const bool same_waves =
      bv.waves.size() == bw.waves.size() &&
      std::equal(bv.waves.begin(), bv.waves.end(), bw.waves.begin(),
                 [](const SineWave& x, const SineWave& y) {
                   return x.amplitude == y.amplitude && x.frequency == y.frequency &&
                          x.phase == y.phase;
                 });
  if (!same_waves) {
    for (const auto& s : bv.waves) bound += norm(s.amplitude);
    for (const auto& s : bw.waves) bound += norm(s.amplitude);
  }
  const bool same_convolution = v.model().kernel().same_as(w.model().kernel()) &&
                                v.frozen() == w.frozen();
  if (!same_convolution) {
    bound += v.model().kernel().sup() * total_mass(v.frozen()) +
             w.model().kernel().sup() * total_mass(w.frozen());
  }
  return bound;
}

ConstantSpotCheck spot_check_constants(const VectorFieldModel& model,
                                       std::span<const DiscreteMeasure> measures,
                                       std::uint64_t seed, int pairs, double box) {
  ConstantSpotCheck out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-box, box);
  std::uniform_real_distribution<double> nudge(-1e-3 * box, 1e-3 * box);
  const auto d = static_cast<std::size_t>(model.dim());
  std::vector<double> x(d), y(d), vx(d), vy(d), diff(d);
  for (const auto& mu : measures) {
    const FrozenField field = model.freeze(mu);
    for (int s = 0; s < pairs; ++s) {
      for (auto& c : x) c = coord(rng);
      // Alternate far pairs with close ones to probe local slopes.
      for (std::size_t c = 0; c < d; ++c) y[c] = s % 2 == 0 ? coord(rng) : x[c] + nudge(rng);
      field.evaluate(x, vx);
      field.evaluate(y, vy);
      for (std::size_t c = 0; c < d; ++c) diff[c] = x[c] - y[c];
      const double dx = norm(diff);
      for (std::size_t c = 0; c < d; ++c) diff[c] = vx[c] - vy[c];
      if (dx > 0.0) out.max_lipschitz_ratio = std::max(out.max_lipschitz_ratio, norm(diff) / dx);
      out.max_speed = std::max({out.max_speed, norm(vx), norm(vy)});
      ++out.samples;
    }
  }
  return out;
}

}  // namespace gwass
