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
#include "gwass/gw.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gwass/kernels.hpp"

namespace gwass {

void GwParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("a must be a positive finite real");
  }
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("b must be a positive finite real");
  }
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("p must be a finite real >= 1");
  }
}

double GwResult::recompute(const GwParams& params) const {
  const double w = plan_cost(plan, kept_source, kept_target, params.p);
  return params.a * (removed_source_mass + removed_target_mass) +
         params.b * std::pow(w, 1.0 / params.p);
}

double GwResult::max_arc_length() const {
  return gwass::max_arc_length(plan, kept_source, kept_target);
}

namespace {

struct Instance {
  DiscreteMeasure source;
  DiscreteMeasure target;
  std::vector<double> cost;  // |x_i - y_j|^p, row-major
};

Instance make_instance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                       double p) {
  if (mu.dim() != nu.dim()) throw DimensionMismatch(mu.dim(), nu.dim());
  Instance in{compact(mu), compact(nu), {}};
  in.cost.resize(in.source.size() * in.target.size());
  kernels::pairwise_cost(kernels::Backend::kSerial, in.source.positions(),
                         in.target.positions(), mu.dim(), p, in.cost);
  return in;
}

std::vector<ParametricTransport::Arc> all_arcs(const Instance& in) {
  std::vector<ParametricTransport::Arc> arcs;
  const std::size_t m = in.target.size();
  arcs.reserve(in.cost.size());
  for (std::size_t i = 0; i < in.source.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) arcs.push_back({i, j, in.cost[i * m + j]});
  }
  return arcs;
}

}  // namespace

GwResult gw_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     const GwParams& params) {
  params.validate();
  const double a = params.a;
  const double b = params.b;
  const double p = params.p;
  Instance in = make_instance(mu, nu, p);
  const std::size_t n = in.source.size();
  const std::size_t m = in.target.size();
  const double mass_mu = total_mass(in.source);
  const double mass_nu = total_mass(in.target);

  std::vector<ParametricTransport::Arc> arcs;
  std::vector<double> flows;
  if (n > 0 && m > 0) {
    if (p == 1.0) {
      // An arc is worth using only while its length is below 2a/b.
      const double reach = 2.0 * a / b;
      for (const auto& arc : all_arcs(in)) {
        if (arc.cost < reach) arcs.push_back(arc);
      }
      ParametricTransport solver(in.source.weights(), in.target.weights(), arcs);
      while (solver.augment(reach)) {
      }
      flows = solver.arc_flows();
    } else {
      arcs = all_arcs(in);
      ParametricTransport solver(in.source.weights(), in.target.weights(), arcs);
      const double total = mass_mu + mass_nu;
      const double most = std::min(mass_mu, mass_nu);
      double best = a * total;
      flows.assign(arcs.size(), 0.0);
      double shipped = 0.0;
      double t_cost = 0.0;
      // The objective is concave on each segment of T, so only breakpoints
      // can be minimizers.
      while (auto seg = solver.augment()) {
        shipped += seg->amount;
        t_cost += seg->slope * seg->amount;
        const double f = a * (total - 2.0 * shipped) + b * std::pow(t_cost, 1.0 / p);
        if (f < best - 1e-12 * std::max(1.0, best)) {
          best = f;
          flows = solver.arc_flows();
        }
        if (a * (total - 2.0 * most) + b * std::pow(t_cost, 1.0 / p) >= best) break;
      }
    }
  }

  GwResult r;
  std::vector<double> kept_mu(n, 0.0);
  std::vector<double> kept_nu(m, 0.0);
  r.plan.source_size = n;
  r.plan.target_size = m;
  double shipped = 0.0;
  for (std::size_t k = 0; k < flows.size(); ++k) {
    if (!(flows[k] > 0.0)) continue;
    const auto& arc = arcs[k];
    r.plan.entries.push_back({arc.source, arc.target, flows[k]});
    kept_mu[arc.source] += flows[k];
    kept_nu[arc.target] += flows[k];
    r.transport_cost += flows[k] * arc.cost;
    shipped += flows[k];
  }
  for (std::size_t i = 0; i < n; ++i) kept_mu[i] = std::min(kept_mu[i], in.source.weight(i));
  for (std::size_t j = 0; j < m; ++j) kept_nu[j] = std::min(kept_nu[j], in.target.weight(j));
  r.kept_source = in.source.with_weights(std::move(kept_mu));
  r.kept_target = in.target.with_weights(std::move(kept_nu));
  r.removed_source_mass = std::max(0.0, mass_mu - shipped);
  r.removed_target_mass = std::max(0.0, mass_nu - shipped);
  r.value = a * (r.removed_source_mass + r.removed_target_mass) +
            b * std::pow(r.transport_cost, 1.0 / p);
  r.source = std::move(in.source);
  r.target = std::move(in.target);
  return r;
}

double gw_value(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                const GwParams& params) {
  params.validate();
  if (mu.dim() == 1 && nu.dim() == 1 && params.p == 1.0) {
    return gw_line_value(mu, nu, params.a, params.b);
  }
  return gw_distance(mu, nu, params).value;
}

std::vector<FlowSegment> transported_mass_profile(const DiscreteMeasure& mu,
                                                  const DiscreteMeasure& nu,
                                                  double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  Instance in = make_instance(mu, nu, p);
  const auto arcs = all_arcs(in);
  ParametricTransport solver(in.source.weights(), in.target.weights(), arcs);
  std::vector<FlowSegment> out;
  while (auto seg = solver.augment()) out.push_back(*seg);
  return out;
}

}  // namespace gwass
