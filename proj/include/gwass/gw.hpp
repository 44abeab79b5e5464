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
#ifndef GWASS_GW_HPP_
#define GWASS_GW_HPP_

#include <cstddef>
#include <vector>

#include "gwass/measure.hpp"
#include "gwass/min_cost_flow.hpp"
#include "gwass/transport.hpp"

namespace gwass {

/// Cost parameters: a per unit of removed mass, b times the W_p of what is
/// kept, exponent p.
struct GwParams {
  double a = 1.0;
  double b = 1.0;
  double p = 1.0;

  /// Throws std::invalid_argument unless a, b in (0, inf) and p >= 1.
  void validate() const;
};

/// Optimal decomposition behind a generalized Wasserstein value.
///
/// `source` and `target` are the compacted inputs. `kept_source` and
/// `kept_target` live on exactly the same atoms with reduced weights (zeros
/// allowed), and the plan indexes those atom lists.
struct GwResult {
  double value = 0.0;
  DiscreteMeasure source;
  DiscreteMeasure target;
  DiscreteMeasure kept_source;
  DiscreteMeasure kept_target;
  TransportPlan plan;
  double removed_source_mass = 0.0;
  double removed_target_mass = 0.0;
  double transport_cost = 0.0;  // sum flow * |x - y|^p

  /// a * removed + a * removed + b * W_p(kept), from the stored parts.
  double recompute(const GwParams& params) const;

  /// Longest transport arc in the plan.
  double max_arc_length() const;
};

/// Generalized Wasserstein distance with an optimal witness.
///
/// p = 1 is a single transportation solve with inequality marginals and
/// per-unit gain 2a - b|x - y|; only arcs with b|x - y| < 2a are offered.
/// For p > 1 the minimum-cost curve T(m) of shipping total mass m is traced
/// breakpoint by breakpoint and a(|mu| + |nu| - 2m) + b T(m)^{1/p} is
/// minimized over them. Ties go to the smaller kept mass.
GwResult gw_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     const GwParams& params);

/// Value only. On the line with p = 1 this uses an O(n log n) solver;
/// otherwise it calls gw_distance.
double gw_value(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                const GwParams& params);

/// Value for one-dimensional measures and p = 1 by dynamic programming over
/// the sorted support.
double gw_line_value(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     double a, double b);

/// Breakpoints of T(m): segment k ships `amount` more mass at marginal
/// cost `slope` (per unit of sum gamma |x - y|^p).
std::vector<FlowSegment> transported_mass_profile(const DiscreteMeasure& mu,
                                                  const DiscreteMeasure& nu,
                                                  double p);

/// Grid search over plans whose entries are multiples of
/// h = min(|mu|, |nu|) / grid_steps. Limited to 6 atoms in total and 50 steps.
double gw_brute_force(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                      const GwParams& params, int grid_steps);

/// Worst-case excess of gw_brute_force over the true value:
/// 2a * (#atoms mu) * (#atoms nu) * h, from rounding every entry of an
/// optimal plan down to the grid.
double gw_brute_force_bound(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                            const GwParams& params, int grid_steps);

/// Levy-Prokhorov distance of two probability measures on the line with at
/// most 12 atoms each.
double levy_prokhorov_1d(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace gwass

#endif  // GWASS_GW_HPP_
