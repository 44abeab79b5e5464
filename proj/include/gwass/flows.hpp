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
#ifndef GWASS_FLOWS_HPP_
#define GWASS_FLOWS_HPP_

#include <string>

#include "gwass/fields.hpp"
#include "gwass/gw.hpp"
#include "gwass/kernels.hpp"
#include "gwass/measure.hpp"

namespace gwass {

/// Fixed-step classical RK4; the horizon is split into ceil(t / ode_step)
/// equal substeps.
struct FlowConfig {
  double ode_step = 1e-2;
  kernels::Backend backend = kernels::Backend::kParallel;

  void validate() const;
};

/// Moves every atom of `carrier` along x' = v(x) for time t. Weights are
/// untouched.
DiscreteMeasure flow_pushforward(const VelocityField& v,
                                 const DiscreteMeasure& carrier, double t,
                                 const FlowConfig& cfg);

/// Same, with v = model frozen at `frozen`.
DiscreteMeasure flow_pushforward(const VectorFieldModel& model,
                                 const DiscreteMeasure& carrier,
                                 const DiscreteMeasure& frozen, double t,
                                 const FlowConfig& cfg);

struct BoundCheck {
  std::string name;
  std::string anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds(double tol) const { return lhs <= rhs + tol; }
};

/// Left and right sides of the three stability estimates for flows of
/// bounded Lipschitz fields v, w (Lipschitz constant L = max of the two):
///
///   contraction:   gw(F_v mu, F_v nu) <= e^{((p+1)/p) L t} gw(mu, nu)
///   displacement:  gw(mu, F_v mu)     <= b t |v|_inf |mu|^{1/p}
///   perturbation:  gw(F_v mu, F_w nu) <= e^{((p+1)/p) L t} gw(mu, nu)
///                      + b |mu|^{1/p} e^{Lt/p} (e^{Lt} - 1) / L |v - w|_inf
///
/// where F_v is the time-t flow. The factor b is needed for b > 1.
struct FlowEstimateReport {
  BoundCheck contraction;
  BoundCheck displacement;
  BoundCheck perturbation;
  double lipschitz = 0.0;
  double field_distance = 0.0;
};

FlowEstimateReport flow_estimate_report(const FrozenField& v, const FrozenField& w,
                                        const DiscreteMeasure& mu,
                                        const DiscreteMeasure& nu, double t,
                                        const GwParams& params,
                                        const FlowConfig& cfg);

}  // namespace gwass

#endif  // GWASS_FLOWS_HPP_
