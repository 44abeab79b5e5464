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
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gwass/gw.hpp"

namespace gwass {

namespace {

constexpr int kMaxAtoms = 6;
constexpr int kMaxSteps = 50;
constexpr double kMaxGridPoints = 5e8;

struct Grid {
  std::vector<double> mu_w, nu_w;
  std::vector<std::vector<double>> mu_x, nu_x;
  std::vector<int> row_cap, col_cap;
  std::vector<double> cost;  // |x - y|^p, row-major
  double mass_mu = 0.0, mass_nu = 0.0, unit = 0.0;
};

Grid build_grid(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                const GwParams& params, int grid_steps) {
  params.validate();
  if (mu.dim() != nu.dim()) throw DimensionMismatch(mu.dim(), nu.dim());
  if (grid_steps < 1 || grid_steps > kMaxSteps) {
    throw std::invalid_argument("grid_steps must lie in [1, 50]");
  }
  Grid g;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.weight(i) <= 0.0) continue;
    g.mu_w.push_back(mu.weight(i));
    g.mu_x.emplace_back(mu.position(i).begin(), mu.position(i).end());
  }
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (nu.weight(j) <= 0.0) continue;
    g.nu_w.push_back(nu.weight(j));
    g.nu_x.emplace_back(nu.position(j).begin(), nu.position(j).end());
  }
  if (g.mu_w.size() + g.nu_w.size() > kMaxAtoms) {
    throw std::length_error("brute-force oracle is limited to 6 atoms");
  }
  g.mass_mu = total_mass(mu);
  g.mass_nu = total_mass(nu);
  g.unit = std::min(g.mass_mu, g.mass_nu) / grid_steps;
  if (g.unit <= 0.0) return g;

  double work = 1.0;
  for (double w : g.mu_w) {
    const int cap = static_cast<int>(std::floor(w / g.unit + 1e-9));
    g.row_cap.push_back(cap);
    // Nonnegative integer vectors of length #targets with sum <= cap.
    double combos = 1.0;
    for (std::size_t k = 1; k <= g.nu_w.size(); ++k) combos *= (cap + k) / static_cast<double>(k);
    work *= combos;
  }
  if (work > kMaxGridPoints) {
    throw std::length_error("brute-force grid too large for this instance");
  }
  for (double w : g.nu_w) {
    g.col_cap.push_back(static_cast<int>(std::floor(w / g.unit + 1e-9)));
  }
  for (const auto& x : g.mu_x) {
    for (const auto& y : g.nu_x) {
      g.cost.push_back(std::pow(euclidean_distance(x, y), params.p));
    }
  }
  return g;
}

class Search {
 public:
  Search(const Grid& g, const GwParams& params, int grid_steps)
      : g_(g), params_(params), steps_(grid_steps),
        rows_(g.row_cap), cols_(g.col_cap) {}

  double run() {
    visit(0, 0, 0.0);
    return best_;
  }

 private:
  void visit(std::size_t entry, int units, double cost_units) {
    const std::size_t m = g_.nu_w.size();
    if (entry == g_.mu_w.size() * m) {
      const double shipped = std::min(g_.mass_mu, g_.mass_nu) * units / steps_;
      const double f = params_.a * (g_.mass_mu + g_.mass_nu - 2.0 * shipped) +
                       params_.b * std::pow(g_.unit * cost_units, 1.0 / params_.p);
      best_ = std::min(best_, f);
      return;
    }
    const std::size_t i = entry / m;
    const std::size_t j = entry % m;
    const int top = std::min(rows_[i], cols_[j]);
    for (int k = 0; k <= top; ++k) {
      rows_[i] -= k;
      cols_[j] -= k;
      visit(entry + 1, units + k, cost_units + k * g_.cost[entry]);
      rows_[i] += k;
      cols_[j] += k;
    }
  }

  const Grid& g_;
  const GwParams& params_;
  int steps_;
  std::vector<int> rows_, cols_;
  double best_ = std::numeric_limits<double>::infinity();
};

}  // namespace

double gw_brute_force(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                      const GwParams& params, int grid_steps) {
  const Grid g = build_grid(mu, nu, params, grid_steps);
  if (g.unit <= 0.0 || g.mu_w.empty() || g.nu_w.empty()) {
    return params.a * (g.mass_mu + g.mass_nu);
  }
  return Search(g, params, grid_steps).run();
}

double gw_brute_force_bound(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                            const GwParams& params, int grid_steps) {
  const Grid g = build_grid(mu, nu, params, grid_steps);
  return 2.0 * params.a * static_cast<double>(g.mu_w.size() * g.nu_w.size()) * g.unit;
}

}  // namespace gwass
