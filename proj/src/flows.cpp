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
#include "gwass/flows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gwass {

void FlowConfig::validate() const {
  if (!(ode_step > 0.0) || !std::isfinite(ode_step)) {
    throw std::invalid_argument("ode_step must be a positive finite real");
  }
}

DiscreteMeasure flow_pushforward(const VelocityField& v,
                                 const DiscreteMeasure& carrier, double t,
                                 const FlowConfig& cfg) {
  cfg.validate();
  if (!(t >= 0.0)) throw std::invalid_argument("flow time must be nonnegative");
  if (carrier.dim() != v.dim()) throw DimensionMismatch(v.dim(), carrier.dim());
  DiscreteMeasure out = carrier;
  if (t == 0.0 || out.empty()) return out;
  kernels::integrate_rk4(cfg.backend, v, out.mutable_positions(), t, cfg.ode_step);
  return out;
}

DiscreteMeasure flow_pushforward(const VectorFieldModel& model,
                                 const DiscreteMeasure& carrier,
                                 const DiscreteMeasure& frozen, double t,
                                 const FlowConfig& cfg) {
  return flow_pushforward(model.freeze(frozen), carrier, t, cfg);
}

FlowEstimateReport flow_estimate_report(const FrozenField& v, const FrozenField& w,
                                        const DiscreteMeasure& mu,
                                        const DiscreteMeasure& nu, double t,
                                        const GwParams& params,
                                        const FlowConfig& cfg) {
  params.validate();
  const double p = params.p;
  const double L = std::max(v.lipschitz(), w.lipschitz());
  const double growth = std::exp((p + 1.0) / p * L * t);
  const double mass_root = std::pow(total_mass(mu), 1.0 / p);

  const DiscreteMeasure v_mu = flow_pushforward(v, mu, t, cfg);
  const DiscreteMeasure v_nu = flow_pushforward(v, nu, t, cfg);
  const DiscreteMeasure w_nu = flow_pushforward(w, nu, t, cfg);
  const double base = gw_value(mu, nu, params);

  FlowEstimateReport r;
  r.lipschitz = L;
  r.field_distance = sup_distance_bound(v, w);

  r.contraction = {"contraction", "gw(Fv mu, Fv nu) <= e^{((p+1)/p)Lt} gw(mu, nu)",
                   gw_value(v_mu, v_nu, params), growth * base};
  r.displacement = {"displacement", "gw(mu, Fv mu) <= b t |v|_inf |mu|^{1/p}",
                    gw_value(mu, v_mu, params), params.b * t * v.sup_bound() * mass_root};
  // (e^{Lt} - 1) / L tends to t as L -> 0.
  const double spread = L > 0.0 ? std::expm1(L * t) / L : t;
  r.perturbation = {"perturbation",
                    "gw(Fv mu, Fw nu) <= e^{((p+1)/p)Lt} gw(mu, nu) + "
                    "b |mu|^{1/p} e^{Lt/p} (e^{Lt}-1)/L |v-w|_inf",
                    gw_value(v_mu, w_nu, params),
                    growth * base + params.b * mass_root * std::exp(L * t / p) *
                                        spread * r.field_distance};
  return r;
}

}  // namespace gwass
