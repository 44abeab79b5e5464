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

#ifndef GWASS_MIN_COST_FLOW_HPP_
#define GWASS_MIN_COST_FLOW_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace gwass {

struct PlanEntry {
  std::size_t source;
  std::size_t target;
  double flow;
};

/// One linear piece of the optimal-cost-versus-transported-mass curve:
/// `amount` more units can be shipped at marginal cost `slope`.
struct FlowSegment {
  double slope;
  double amount;
};

/// Bipartite transportation problem with inequality marginals, solved by
/// successive shortest augmenting paths with Johnson potentials.
///
/// Source atom i may ship at most `supply[i]`, target atom j may receive at
/// most `demand[j]`. Each call to augment() pushes flow along one cheapest
/// residual path, so after every call the current flow is a minimum-cost
/// flow for its value. Path costs are nondecreasing, which makes the
/// sequence of returned segments the exact breakpoints of the convex
/// piecewise-linear curve T(m) = min { cost : total flow = m }.
///
/// Arc costs must be nonnegative.
class ParametricTransport {
 public:
  struct Arc {
    std::size_t source;
    std::size_t target;
    double cost;
  };

  ParametricTransport(std::span<const double> supply,
                      std::span<const double> demand,
                      std::span<const Arc> arcs);

  /// Pushes flow along one shortest path; nullopt when no path remains or
  /// the cheapest path costs `slope_limit` or more. Potentials stay valid
  /// either way, so the solve can be resumed.
  std::optional<FlowSegment> augment(
      double slope_limit = std::numeric_limits<double>::infinity());

  double flow_value() const { return flow_value_; }

  /// Sum of flow * cost, recomputed from the arc flows.
  double cost() const;

  /// Flow on each input arc, in input order.
  std::vector<double> arc_flows() const;

  /// Nonzero arc flows as plan entries.
  std::vector<PlanEntry> plan() const;

  /// Node potentials after the last augmentation. Every residual arc has
  /// nonnegative reduced cost `cost + pi(tail) - pi(head)` (up to rounding),
  /// which makes them a dual certificate for the current flow.
  double source_potential(std::size_t i) const { return potential_[1 + i]; }
  double target_potential(std::size_t j) const {
    return potential_[1 + num_sources_ + j];
  }

  std::size_t num_sources() const { return num_sources_; }
  std::size_t num_targets() const { return num_targets_; }
  std::span<const Arc> arcs() const { return arcs_; }

 private:
  struct Edge {
    int to;
    double residual;
    double cost;
  };

  void add_edge(int from, int to, double capacity, double cost);
  bool shortest_paths();

  std::size_t num_sources_;
  std::size_t num_targets_;
  std::vector<Arc> arcs_;
  std::vector<Edge> edges_;             // edge e and its reverse e ^ 1
  std::vector<std::vector<int>> adj_;   // outgoing edge ids per node
  std::vector<double> potential_;
  std::vector<double> dist_;
  std::vector<int> parent_edge_;
  std::size_t first_arc_edge_ = 0;
  double residual_eps_ = 0.0;
  double flow_value_ = 0.0;
};

}  // namespace gwass

#endif  // GWASS_MIN_COST_FLOW_HPP_
