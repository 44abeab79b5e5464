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
// For atomic measures the condition mu(A) <= nu(A^alpha) + alpha is hardest
// on sets A made of atoms of mu, so the one-sided distance is the largest,
// over subsets S of supp(mu), of the smallest alpha that works for S.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gwass/gw.hpp"

namespace gwass {

namespace {

constexpr std::size_t kMaxAtoms = 12;

DiscreteMeasure checked(const DiscreteMeasure& mu) {
  if (mu.dim() != 1) throw std::invalid_argument("Levy-Prokhorov needs dim = 1");
  if (std::abs(total_mass(mu) - 1.0) > 1e-9) {
    throw std::invalid_argument("Levy-Prokhorov needs probability measures");
  }
  DiscreteMeasure c = compact(mu);
  if (c.size() > kMaxAtoms) {
    throw std::length_error("Levy-Prokhorov is limited to 12 atoms per measure");
  }
  return c;
}

// inf { alpha : mu(S) <= nu({y : dist(y, S) < alpha}) + alpha  for all S }.
double one_sided(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const std::size_t n = mu.size();
  double worst = 0.0;
  std::vector<std::pair<double, double>> reach(nu.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) mass += mu.weight(i);
    }
    for (std::size_t j = 0; j < nu.size(); ++j) {
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) d = std::min(d, std::abs(nu.position(j)[0] - mu.position(i)[0]));
      }
      reach[j] = {d, nu.weight(j)};
    }
    std::sort(reach.begin(), reach.end());
    // Once alpha exceeds the k-th smallest distance, the k nearest atoms
    // count; the remaining deficit has to be covered by alpha itself.
    double alpha = mass;
    double covered = 0.0;
    for (const auto& [d, w] : reach) {
      covered += w;
      double deficit = mass - covered;
      // Summation order differs between the two sides; do not let rounding
      // turn an exact cover into a positive deficit.
      if (deficit <= 8.0 * std::numeric_limits<double>::epsilon() * mass) deficit = 0.0;
      alpha = std::min(alpha, std::max(d, deficit));
    }
    worst = std::max(worst, alpha);
  }
  return worst;
}

}  // namespace

double levy_prokhorov_1d(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const DiscreteMeasure a = checked(mu);
  const DiscreteMeasure b = checked(nu);
  return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace gwass
