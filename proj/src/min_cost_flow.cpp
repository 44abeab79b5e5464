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

#include "gwass/min_cost_flow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace gwass {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// Node layout: 0 = super source, 1..n = source atoms, n+1..n+m = target
// atoms, n+m+1 = super sink.
ParametricTransport::ParametricTransport(std::span<const double> supply,
                                         std::span<const double> demand,
                                         std::span<const Arc> arcs)
    : num_sources_(supply.size()),
      num_targets_(demand.size()),
      arcs_(arcs.begin(), arcs.end()) {
  const std::size_t nodes = num_sources_ + num_targets_ + 2;
  adj_.resize(nodes);
  potential_.assign(nodes, 0.0);
  dist_.assign(nodes, kInf);
  parent_edge_.assign(nodes, -1);

  double scale = 0.0;
  for (double s : supply) scale = std::max(scale, s);
  for (double d : demand) scale = std::max(scale, d);
  residual_eps_ = 1e-15 * std::max(1.0, scale);

  const int sink = static_cast<int>(nodes - 1);
  for (std::size_t i = 0; i < num_sources_; ++i) {
    add_edge(0, static_cast<int>(1 + i), supply[i], 0.0);
  }
  for (std::size_t j = 0; j < num_targets_; ++j) {
    add_edge(static_cast<int>(1 + num_sources_ + j), sink, demand[j], 0.0);
  }
  first_arc_edge_ = edges_.size();
  for (const Arc& a : arcs_) {
    if (a.source >= num_sources_ || a.target >= num_targets_) {
      throw std::out_of_range("arc endpoint out of range");
    }
    if (!(a.cost >= 0.0)) throw std::invalid_argument("arc cost must be >= 0");
    add_edge(static_cast<int>(1 + a.source),
             static_cast<int>(1 + num_sources_ + a.target), kInf, a.cost);
  }
}

void ParametricTransport::add_edge(int from, int to, double capacity,
                                   double cost) {
  adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
  edges_.push_back({to, capacity, cost});
  adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(edges_.size()));
  edges_.push_back({from, 0.0, -cost});
}

// Dijkstra on reduced costs from the super source. Returns whether the sink
// is reachable; potentials are updated either way.
bool ParametricTransport::shortest_paths() {
  const std::size_t nodes = adj_.size();
  const auto sink = nodes - 1;
  std::fill(dist_.begin(), dist_.end(), kInf);
  std::fill(parent_edge_.begin(), parent_edge_.end(), -1);

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist_[0] = 0.0;
  heap.emplace(0.0, 0);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    const auto uu = static_cast<std::size_t>(u);
    if (d > dist_[uu]) continue;
    for (int e : adj_[uu]) {
      const Edge& edge = edges_[static_cast<std::size_t>(e)];
      if (edge.residual <= residual_eps_) continue;
      const auto v = static_cast<std::size_t>(edge.to);
      // Rounding can leave reduced costs a hair below zero.
      const double rc =
          std::max(0.0, edge.cost + potential_[uu] - potential_[v]);
      const double nd = d + rc;
      if (nd < dist_[v]) {
        dist_[v] = nd;
        parent_edge_[v] = e;
        heap.emplace(nd, edge.to);
      }
    }
  }

  const double cap = dist_[sink];
  if (!std::isfinite(cap)) return false;
  // Capping by the sink distance keeps every residual reduced cost
  // nonnegative, including arcs out of unreachable nodes.
  for (std::size_t v = 0; v < nodes; ++v) {
    potential_[v] += std::min(dist_[v], cap);
  }
  return true;
}

std::optional<FlowSegment> ParametricTransport::augment(double slope_limit) {
  if (!shortest_paths()) return std::nullopt;
  const auto sink = adj_.size() - 1;
  // The source keeps potential 0, so the sink potential is the true cost of
  // the path about to be used.
  const double slope = potential_[sink] - potential_[0];
  if (!(slope < slope_limit)) return std::nullopt;

  double amount = kInf;
  for (auto v = sink; v != 0;) {
    const Edge& e = edges_[static_cast<std::size_t>(parent_edge_[v])];
    amount = std::min(amount, e.residual);
    v = static_cast<std::size_t>(edges_[static_cast<std::size_t>(parent_edge_[v]) ^ 1].to);
  }
  for (auto v = sink; v != 0;) {
    const auto e = static_cast<std::size_t>(parent_edge_[v]);
    edges_[e].residual -= amount;
    if (edges_[e].residual <= residual_eps_) edges_[e].residual = 0.0;
    edges_[e ^ 1].residual += amount;
    v = static_cast<std::size_t>(edges_[e ^ 1].to);
  }
  flow_value_ += amount;
  return FlowSegment{slope, amount};
}

std::vector<double> ParametricTransport::arc_flows() const {
  std::vector<double> flows(arcs_.size());
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    flows[k] = edges_[first_arc_edge_ + 2 * k + 1].residual;
  }
  return flows;
}

double ParametricTransport::cost() const {
  double c = 0.0;
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    c += edges_[first_arc_edge_ + 2 * k + 1].residual * arcs_[k].cost;
  }
  return c;
}

std::vector<PlanEntry> ParametricTransport::plan() const {
  std::vector<PlanEntry> out;
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    const double f = edges_[first_arc_edge_ + 2 * k + 1].residual;
    if (f > 0.0) out.push_back({arcs_[k].source, arcs_[k].target, f});
  }
  return out;
}

}  // namespace gwass
