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

#ifndef GWASS_TRANSPORT_HPP_
#define GWASS_TRANSPORT_HPP_

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gwass/measure.hpp"
#include "gwass/min_cost_flow.hpp"

namespace gwass {

/// Raised when a balanced transport problem is given unequal masses.
class MassMismatch : public std::domain_error {
 public:
  MassMismatch(double lhs, double rhs);
};

/// Sparse coupling between the atoms of two measures. Indices refer to the
/// atom order of the measures the plan was computed for.
struct TransportPlan {
  std::vector<PlanEntry> entries;
  std::size_t source_size = 0;
  std::size_t target_size = 0;

  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;
  double total_flow() const;
};

/// sum flow * |x_i - y_j|^p over the plan.
double plan_cost(const TransportPlan& plan, const DiscreteMeasure& source,
                 const DiscreteMeasure& target, double p);

/// Longest |x_i - y_j| carried by a positive entry; 0 for an empty plan.
double max_arc_length(const TransportPlan& plan, const DiscreteMeasure& source,
                      const DiscreteMeasure& target);

/// Dual potentials (u, v) with u_i + v_j <= c_ij, read back from the solver.
struct DualCertificate {
  double primal = 0.0;
  double dual = 0.0;
  double max_infeasibility = 0.0;  // max (u_i + v_j - c_ij)^+
  double max_slackness = 0.0;      // max |c_ij - u_i - v_j| on used arcs

  bool certifies(double tol) const;
};

struct WpResult {
  double value = 0.0;
  double p = 1.0;
  TransportPlan plan;
  DualCertificate certificate;
};

/// Exact W_p between equal-mass measures, unnormalized:
/// W_p^p = min sum gamma_ij |x_i - y_j|^p over couplings with the given
/// marginals. Throws MassMismatch if the masses differ by more than tol.
WpResult wasserstein(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     double p, double tol = 1e-9);

/// (W_p(k mu, k nu), k^{1/p} W_p(mu, nu)).
std::pair<double, double> wasserstein_scaling_check(const DiscreteMeasure& mu,
                                                    const DiscreteMeasure& nu,
                                                    double k, double p);

}  // namespace gwass

#endif  // GWASS_TRANSPORT_HPP_
