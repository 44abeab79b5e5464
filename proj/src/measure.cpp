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

#include "gwass/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gwass {

DimensionMismatch::DimensionMismatch(int lhs, int rhs)
    : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs)) {}

namespace {

void check_weight(double w) {
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("atom weight must be finite and nonnegative");
  }
}

void check_position(std::span<const double> x) {
  for (double c : x) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("atom position must be finite");
    }
  }
}

// Lexicographic order on atom indices of `mu`.
std::vector<std::size_t> sorted_order(const DiscreteMeasure& mu) {
  std::vector<std::size_t> order(mu.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     auto xi = mu.position(i);
                     auto xj = mu.position(j);
                     return std::lexicographical_compare(
                         xi.begin(), xi.end(), xj.begin(), xj.end());
                   });
  return order;
}

bool equal_positions(std::span<const double> x, std::span<const double> y) {
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
}

DiscreteMeasure::DiscreteMeasure(int dim, std::vector<double> positions,
                                 std::vector<double> weights)
    : dim_(dim), positions_(std::move(positions)), weights_(std::move(weights)) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
  if (positions_.size() != weights_.size() * static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("position buffer does not match atom count");
  }
  for (double w : weights_) check_weight(w);
  check_position(positions_);
}

DiscreteMeasure DiscreteMeasure::dirac(std::initializer_list<double> x,
                                       double w) {
  return dirac(std::span<const double>(x.begin(), x.size()), w);
}

DiscreteMeasure DiscreteMeasure::dirac(std::span<const double> x, double w) {
  DiscreteMeasure mu(static_cast<int>(x.size()));
  mu.add_atom(x, w);
  return mu;
}

void DiscreteMeasure::add_atom(std::span<const double> x, double w) {
  if (x.size() != static_cast<std::size_t>(dim_)) {
    throw DimensionMismatch(dim_, static_cast<int>(x.size()));
  }
  check_weight(w);
  check_position(x);
  positions_.insert(positions_.end(), x.begin(), x.end());
  weights_.push_back(w);
}

void DiscreteMeasure::add_atom(std::initializer_list<double> x, double w) {
  add_atom(std::span<const double>(x.begin(), x.size()), w);
}

DiscreteMeasure DiscreteMeasure::with_weights(std::vector<double> weights) const {
  if (weights.size() != weights_.size()) {
    throw std::invalid_argument("weight vector does not match atom count");
  }
  return DiscreteMeasure(dim_, positions_, std::move(weights));
}

double total_mass(const DiscreteMeasure& mu) {
  double s = 0.0;
  for (double w : mu.weights()) s += w;
  return s;
}

DiscreteMeasure scale(const DiscreteMeasure& mu, double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("scale factor must be finite and nonnegative");
  }
  std::vector<double> w(mu.weights().begin(), mu.weights().end());
  for (double& x : w) x *= k;
  return mu.with_weights(std::move(w));
}

DiscreteMeasure add(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (mu.dim() != nu.dim()) throw DimensionMismatch(mu.dim(), nu.dim());
  std::vector<double> pos(mu.positions().begin(), mu.positions().end());
  pos.insert(pos.end(), nu.positions().begin(), nu.positions().end());
  std::vector<double> w(mu.weights().begin(), mu.weights().end());
  w.insert(w.end(), nu.weights().begin(), nu.weights().end());
  return DiscreteMeasure(mu.dim(), std::move(pos), std::move(w));
}

DiscreteMeasure restrict_to(
    const DiscreteMeasure& mu,
    const std::function<bool(std::span<const double>)>& predicate) {
  DiscreteMeasure out(mu.dim());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (predicate(mu.position(i))) out.add_atom(mu.position(i), mu.weight(i));
  }
  return out;
}

DiscreteMeasure push_forward(const DiscreteMeasure& mu, const PointMap& gamma) {
  std::vector<double> pos(mu.positions().size());
  const auto d = static_cast<std::size_t>(mu.dim());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    gamma(mu.position(i), std::span<double>(pos.data() + i * d, d));
  }
  return DiscreteMeasure(mu.dim(), std::move(pos),
                         {mu.weights().begin(), mu.weights().end()});
}

DiscreteMeasure compact(const DiscreteMeasure& mu) {
  DiscreteMeasure out(mu.dim());
  std::vector<double> pos;
  std::vector<double> w;
  const auto d = static_cast<std::size_t>(mu.dim());
  for (std::size_t i : sorted_order(mu)) {
    if (mu.weight(i) == 0.0) continue;
    auto x = mu.position(i);
    if (!w.empty() &&
        equal_positions(x, std::span<const double>(pos.data() + pos.size() - d, d))) {
      w.back() += mu.weight(i);
    } else {
      pos.insert(pos.end(), x.begin(), x.end());
      w.push_back(mu.weight(i));
    }
  }
  return DiscreteMeasure(mu.dim(), std::move(pos), std::move(w));
}

CanonicalForm canonicalize(const DiscreteMeasure& mu, double quantum) {
  if (!(quantum > 0.0)) throw std::invalid_argument("quantum must be positive");
  std::vector<double> snapped(mu.positions().begin(), mu.positions().end());
  for (double& c : snapped) {
    c = std::nearbyint(c / quantum) * quantum;
    if (c == 0.0) c = 0.0;  // fold -0 into +0 so merging is sign-blind
  }
  DiscreteMeasure lattice(mu.dim(), std::move(snapped),
                          {mu.weights().begin(), mu.weights().end()});
  return {quantum, compact(lattice)};
}

namespace {

// Walks two canonical measures in lockstep and calls `site(w_mu, w_nu)` once
// per distinct lattice site.
template <typename Visit>
void merge_sites(const DiscreteMeasure& a, const DiscreteMeasure& b,
                 Visit&& site) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      site(a.weight(i++), 0.0);
    } else if (i == a.size()) {
      site(0.0, b.weight(j++));
    } else {
      auto x = a.position(i);
      auto y = b.position(j);
      if (equal_positions(x, y)) {
        site(a.weight(i++), b.weight(j++));
      } else if (std::lexicographical_compare(x.begin(), x.end(), y.begin(),
                                              y.end())) {
        site(a.weight(i++), 0.0);
      } else {
        site(0.0, b.weight(j++));
      }
    }
  }
}

}  // namespace

double tv_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                   double quantum) {
  if (mu.dim() != nu.dim()) throw DimensionMismatch(mu.dim(), nu.dim());
  const auto a = canonicalize(mu, quantum).measure;
  const auto b = canonicalize(nu, quantum).measure;
  double tv = 0.0;
  merge_sites(a, b, [&](double wa, double wb) { tv += std::abs(wa - wb); });
  return tv;
}

bool same_measure(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                  double quantum, double weight_tol) {
  if (mu.dim() != nu.dim()) return false;
  const auto a = canonicalize(mu, quantum).measure;
  const auto b = canonicalize(nu, quantum).measure;
  bool same = true;
  merge_sites(a, b, [&](double wa, double wb) {
    if (std::abs(wa - wb) > weight_tol) same = false;
  });
  return same;
}

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double support_radius(const DiscreteMeasure& mu) {
  double r = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double s = 0.0;
    for (double c : mu.position(i)) s += c * c;
    r = std::max(r, std::sqrt(s));
  }
  return r;
}

}  // namespace gwass
