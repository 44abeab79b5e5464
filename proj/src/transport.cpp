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

#include "gwass/transport.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwass/kernels.hpp"

namespace gwass {

MassMismatch::MassMismatch(double lhs, double rhs)
    : std::domain_error("mass mismatch: " + std::to_string(lhs) + " vs " +
                        std::to_string(rhs)) {}

std::vector<double> TransportPlan::row_sums() const {
  std::vector<double> s(source_size, 0.0);
  for (const auto& e : entries) s[e.source] += e.flow;
  return s;
}

std::vector<double> TransportPlan::column_sums() const {
  std::vector<double> s(target_size, 0.0);
  for (const auto& e : entries) s[e.target] += e.flow;
  return s;
}

double TransportPlan::total_flow() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.flow;
  return s;
}

double plan_cost(const TransportPlan& plan, const DiscreteMeasure& source,
                 const DiscreteMeasure& target, double p) {
  double c = 0.0;
  for (const auto& e : plan.entries) {
    const double d =
        euclidean_distance(source.position(e.source), target.position(e.target));
    c += e.flow * std::pow(d, p);
  }
  return c;
}

double max_arc_length(const TransportPlan& plan, const DiscreteMeasure& source,
                      const DiscreteMeasure& target) {
  double r = 0.0;
  for (const auto& e : plan.entries) {
    if (e.flow <= 0.0) continue;
    r = std::max(r, euclidean_distance(source.position(e.source),
                                       target.position(e.target)));
  }
  return r;
}

bool DualCertificate::certifies(double tol) const {
  const double scale = std::max(1.0, std::abs(primal));
  return max_infeasibility <= tol * scale && max_slackness <= tol * scale &&
         std::abs(primal - dual) <= tol * scale;
}

namespace {

// One side is a single atom: the only coupling sends it everywhere.
WpResult single_atom(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     double p, bool source_is_single) {
  WpResult r;
  r.p = p;
  r.plan.source_size = mu.size();
  r.plan.target_size = nu.size();
  const DiscreteMeasure& many = source_is_single ? nu : mu;
  const DiscreteMeasure& one = source_is_single ? mu : nu;
  double cost = 0.0;
  for (std::size_t j = 0; j < many.size(); ++j) {
    if (many.weight(j) <= 0.0) continue;
    const double c = std::pow(euclidean_distance(one.position(0), many.position(j)), p);
    cost += many.weight(j) * c;
    r.plan.entries.push_back(source_is_single ? PlanEntry{0, j, many.weight(j)}
                                              : PlanEntry{j, 0, many.weight(j)});
  }
  // Potentials zero on the single atom and c_j on the others are tight.
  r.certificate = {cost, cost, 0.0, 0.0};
  r.value = std::pow(cost, 1.0 / p);
  return r;
}

}  // namespace

namespace {

WpResult solve(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p) {
  const double m_mu = total_mass(mu);
  const double m_nu = total_mass(nu);
  if (m_mu == 0.0 || m_nu == 0.0) {
    WpResult r;
    r.p = p;
    r.plan.source_size = mu.size();
    r.plan.target_size = nu.size();
    return r;
  }
  if (mu.size() == 1) return single_atom(mu, nu, p, true);
  if (nu.size() == 1) return single_atom(mu, nu, p, false);

  const std::size_t n = mu.size();
  const std::size_t m = nu.size();
  std::vector<double> cost(n * m);
  kernels::pairwise_cost(kernels::Backend::kSerial, mu.positions(), nu.positions(),
                         mu.dim(), p, cost);
  std::vector<ParametricTransport::Arc> arcs;
  arcs.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    if (mu.weight(i) <= 0.0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (nu.weight(j) <= 0.0) continue;
      arcs.push_back({i, j, cost[i * m + j]});
    }
  }
  ParametricTransport solver(mu.weights(), nu.weights(), arcs);
  while (solver.augment()) {
  }

  WpResult r;
  r.p = p;
  r.plan = {solver.plan(), n, m};
  const double primal = solver.cost();
  r.value = std::pow(primal, 1.0 / p);

  // u_i = -pi(source i), v_j = pi(target j).
  DualCertificate& cert = r.certificate;
  cert.primal = primal;
  for (std::size_t i = 0; i < n; ++i) cert.dual -= mu.weight(i) * solver.source_potential(i);
  for (std::size_t j = 0; j < m; ++j) cert.dual += nu.weight(j) * solver.target_potential(j);
  const auto flows = solver.arc_flows();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& a = arcs[k];
    const double reduced =
        a.cost + solver.source_potential(a.source) - solver.target_potential(a.target);
    cert.max_infeasibility = std::max(cert.max_infeasibility, -reduced);
    if (flows[k] > 0.0) {
      cert.max_slackness = std::max(cert.max_slackness, std::abs(reduced));
    }
  }
  return r;
}

// Strict total order on measures by (size, weights, positions), used to
// solve (mu, nu) and (nu, mu) as the same problem.
bool precedes(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto wa = a.weights(), wb = b.weights();
  if (!std::equal(wa.begin(), wa.end(), wb.begin())) {
    return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
  }
  auto xa = a.positions(), xb = b.positions();
  return std::lexicographical_compare(xa.begin(), xa.end(), xb.begin(), xb.end());
}

}  // namespace

WpResult wasserstein(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     double p, double tol) {
  if (mu.dim() != nu.dim()) throw DimensionMismatch(mu.dim(), nu.dim());
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("p must be a finite real >= 1");
  }
  const double m_mu = total_mass(mu);
  const double m_nu = total_mass(nu);
  if (std::abs(m_mu - m_nu) > tol) throw MassMismatch(m_mu, m_nu);
  if (!precedes(nu, mu)) return solve(mu, nu, p);

  // Solve in canonical orientation so the value is exactly symmetric.
  WpResult r = solve(nu, mu, p);
  for (auto& e : r.plan.entries) std::swap(e.source, e.target);
  std::sort(r.plan.entries.begin(), r.plan.entries.end(), [](const PlanEntry& x, const PlanEntry& y) {
    return x.source != y.source ? x.source < y.source : x.target < y.target;
  });
  std::swap(r.plan.source_size, r.plan.target_size);
  return r;
}

std::pair<double, double> wasserstein_scaling_check(const DiscreteMeasure& mu,
                                                    const DiscreteMeasure& nu,
                                                    double k, double p) {
  const double scaled = wasserstein(scale(mu, k), scale(nu, k), p).value;
  const double base = wasserstein(mu, nu, p).value;
  return {scaled, std::pow(k, 1.0 / p) * base};
}

}  // namespace gwass
