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
#include "gwass/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace gwass {

double Modulation::operator()(double mass) const {
  if (kind == Kind::kConstant) return level;
  return std::max(0.0, 1.0 - mass / saturation_mass);
}

double Modulation::max_value() const {
  return kind == Kind::kConstant ? level : 1.0;
}

double Modulation::lipschitz() const {
  return kind == Kind::kConstant ? 0.0 : 1.0 / saturation_mass;
}

void Modulation::validate() const {
  if (kind == Kind::kConstant && (!(level >= 0.0) || !std::isfinite(level))) {
    throw std::invalid_argument("modulation level must be finite and nonnegative");
  }
  if (kind == Kind::kSaturating &&
      (!(saturation_mass > 0.0) || !std::isfinite(saturation_mass))) {
    throw std::invalid_argument("saturation mass must be positive");
  }
}

SourceModel::SourceModel(DiscreteMeasure cloud, Modulation modulation)
    : cloud_(std::move(cloud)), modulation_(modulation) {
  modulation_.validate();
}

SourceModel SourceModel::none(int dim) {
  return SourceModel(DiscreteMeasure(dim), Modulation::constant(0.0));
}

SourceModel SourceModel::bump_quadrature(double center, double half_width, int sites,
                                         double mass, Modulation modulation) {
  if (!(half_width > 0.0) || sites < 1 || !(mass >= 0.0)) {
    throw std::invalid_argument("bump quadrature needs half_width > 0, sites >= 1, mass >= 0");
  }
  const double cell = 2.0 * half_width / sites;
  std::vector<double> xs(static_cast<std::size_t>(sites));
  std::vector<double> ws(static_cast<std::size_t>(sites));
  double sum = 0.0;
  for (int i = 0; i < sites; ++i) {
    const double x = center - half_width + (i + 0.5) * cell;
    const double s = (x - center) / half_width;
    xs[static_cast<std::size_t>(i)] = x;
    ws[static_cast<std::size_t>(i)] = (1.0 - s * s) * (1.0 - s * s);
    sum += ws[static_cast<std::size_t>(i)];
  }
  for (double& w : ws) w *= mass / sum;
  return SourceModel(DiscreteMeasure(1, std::move(xs), std::move(ws)), modulation);
}

DiscreteMeasure SourceModel::evaluate(const DiscreteMeasure& mu) const {
  if (mu.dim() != dim()) throw DimensionMismatch(dim(), mu.dim());
  return scale(cloud_, modulation_(total_mass(mu)));
}

double SourceModel::P() const { return total_mass(cloud_) * modulation_.max_value(); }
double SourceModel::R() const { return support_radius(cloud_); }
double SourceModel::Q() const { return total_mass(cloud_) * modulation_.lipschitz(); }

HypothesisConstants hypothesis_constants(const VectorFieldModel& v,
                                         const SourceModel& h,
                                         double initial_mass, double T, double p) {
  HypothesisConstants c;
  c.L = v.constants().L;
  c.M = v.constants().M;
  c.N = v.constants().N;
  c.P = h.P();
  c.R = h.R();
  c.Q = h.Q();
  c.m = std::pow(initial_mass + c.P * T, 1.0 / p);
  c.C1 = 5.0 * c.L + 4.0 * c.m * c.N + c.Q;
  c.C2 = c.m * c.N * (c.M * c.m + c.P) + c.M * c.P / 4.0;
  return c;
}

namespace {

DiscreteMeasure hold_step(const DiscreteMeasure& mu, const VectorFieldModel& v,
                          const SourceModel& h, double s, const FlowConfig& cfg) {
  const FrozenField field = v.freeze(mu);
  DiscreteMeasure moved = flow_pushforward(field, mu, s, cfg);
  return compact(add(moved, scale(h.evaluate(mu), s)));
}

std::vector<std::string> scheme_warnings(const VectorFieldModel& v,
                                         const HypothesisConstants& c, double p) {
  std::vector<std::string> w = v.warnings();
  if (v.mass_bound() < std::pow(c.m, p) * (1.0 - 1e-12)) {
    w.push_back("field mass bound is below |mu_0| + P T; L, M and N are not certified");
  }
  return w;
}

}  // namespace

Trajectory sample_and_hold(const DiscreteMeasure& mu0, const VectorFieldModel& v,
                           const SourceModel& h, double T, int k,
                           const FlowConfig& cfg, const SchemeOptions& options) {
  cfg.validate();
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("T must be positive");
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  if (k > options.max_level) {
    throw std::length_error("level " + std::to_string(k) + " exceeds the cap of " +
                            std::to_string(options.max_level));
  }
  if (mu0.dim() != v.dim()) throw DimensionMismatch(v.dim(), mu0.dim());
  if (h.dim() != v.dim()) throw DimensionMismatch(v.dim(), h.dim());

  Trajectory traj;
  traj.level = k;
  traj.T = T;
  traj.dt = std::ldexp(T, -k);
  traj.constants = hypothesis_constants(v, h, total_mass(mu0), T, options.p);
  traj.warnings = scheme_warnings(v, traj.constants, options.p);

  const std::size_t steps = std::size_t{1} << k;
  traj.snapshots.reserve(steps + 1);
  traj.snapshots.push_back({0.0, mu0});
  for (std::size_t n = 0; n < steps; ++n) {
    const DiscreteMeasure& mu = traj.snapshots.back().mu;
    DiscreteMeasure next = hold_step(mu, v, h, traj.dt, cfg);
    traj.snapshots.push_back({static_cast<double>(n + 1) * traj.dt, std::move(next)});
  }
  return traj;
}

DiscreteMeasure evaluate_at(const Trajectory& traj, const VectorFieldModel& v,
                            const SourceModel& h, double t, const FlowConfig& cfg) {
  if (!(t >= 0.0) || t > traj.T * (1.0 + 1e-12)) {
    throw std::invalid_argument("time outside [0, T]");
  }
  const std::size_t last = traj.snapshots.size() - 1;
  const auto n = std::min(static_cast<std::size_t>(std::floor(t / traj.dt)), last);
  const double tau = t - static_cast<double>(n) * traj.dt;
  if (n == last || tau <= 0.0) return traj.snapshots[n].mu;
  return hold_step(traj.snapshots[n].mu, v, h, tau, cfg);
}

double log2_slope(const std::vector<int>& levels, const std::vector<double>& values) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < levels.size() && i < values.size(); ++i) {
    if (values[i] > 0.0) pts.emplace_back(levels[i], std::log2(values[i]));
  }
  if (pts.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxy / sxx;
}

CauchyTable cauchy_table(const DiscreteMeasure& mu0, const VectorFieldModel& v,
                         const SourceModel& h, double T, int k_min, int k_max,
                         const GwParams& params, const FlowConfig& cfg,
                         const SchemeOptions& options) {
  params.validate();
  if (k_min < 0 || k_max <= k_min) {
    throw std::invalid_argument("need 0 <= k_min < k_max");
  }
  std::vector<Trajectory> levels;
  for (int k = k_min; k <= k_max; ++k) {
    levels.push_back(sample_and_hold(mu0, v, h, T, k, cfg, options));
  }

  struct Job {
    std::size_t level;
    std::size_t n;
  };
  std::vector<Job> jobs;
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    for (std::size_t n = 0; n < levels[l].snapshots.size(); ++n) jobs.push_back({l, n});
  }
  std::vector<double> values(jobs.size(), 0.0);
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < count; ++j) {
    const Job& job = jobs[static_cast<std::size_t>(j)];
    try {
      values[static_cast<std::size_t>(j)] =
          gw_value(levels[job.level].snapshots[job.n].mu,
                   levels[job.level + 1].snapshots[2 * job.n].mu, params);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  CauchyTable table;
  table.constants = levels.front().constants;
  table.warnings = levels.front().warnings;
  if (k_max - k_min < 3) {
    table.warnings.push_back("fewer than three level pairs; the slope fit is weak");
  }
  std::vector<int> ks;
  std::vector<double> ds;
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    CauchyRow row;
    row.level = k_min + static_cast<int>(l);
    row.bound = 2.0 * table.constants.C2 * T * T * std::ldexp(1.0, -row.level);
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      if (jobs[j].level != l) continue;
      if (values[j] > row.D) {
        row.D = values[j];
        row.worst_time = levels[l].snapshots[jobs[j].n].t;
      }
    }
    ks.push_back(row.level);
    ds.push_back(row.D);
    table.rows.push_back(row);
  }
  table.slope = log2_slope(ks, ds);
  return table;
}

DependenceTable continuous_dependence_check(const DiscreteMeasure& mu0,
                                            const DiscreteMeasure& nu0,
                                            const VectorFieldModel& v,
                                            const SourceModel& h, double T, int k,
                                            const GwParams& params,
                                            const FlowConfig& cfg,
                                            const SchemeOptions& options) {
  params.validate();
  SchemeOptions opts = options;
  opts.p = params.p;
  // Mass constant m must cover both trajectories.
  const Trajectory a = sample_and_hold(mu0, v, h, T, k, cfg, opts);
  const Trajectory b = sample_and_hold(nu0, v, h, T, k, cfg, opts);

  DependenceTable table;
  table.constants = total_mass(mu0) >= total_mass(nu0) ? a.constants : b.constants;
  table.warnings = total_mass(mu0) >= total_mass(nu0) ? a.warnings : b.warnings;
  const auto& c = table.constants;
  const double p = params.p;
  table.rate = (p + 1.0) / p * c.L + 2.0 * c.m * c.N + c.Q + 1.0;

  const std::size_t count = a.snapshots.size();
  table.rows.resize(count);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(count); ++j) {
    const auto n = static_cast<std::size_t>(j);
    try {
      table.rows[n].t = a.snapshots[n].t;
      table.rows[n].distance = gw_value(a.snapshots[n].mu, b.snapshots[n].mu, params);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  const double start = table.rows.front().distance;
  for (auto& row : table.rows) row.bound = std::exp(table.rate * row.t) * start;
  return table;
}

ReferenceProblem reference_problem() {
  constexpr int kAtoms = 40;
  std::vector<double> xs(kAtoms), ws(kAtoms, 1.0 / kAtoms);
  for (int i = 0; i < kAtoms; ++i) xs[static_cast<std::size_t>(i)] = -1.0 + (i + 0.5) / kAtoms;
  DiscreteMeasure mu0(1, std::move(xs), std::move(ws));
  SourceModel h = SourceModel::bump_quadrature(0.0, 0.25, 10, 0.2, Modulation::constant(1.0));
  const double T = 1.0;
  GwParams params{1.0, 1.0, 1.0};
  VectorFieldModel v(BaseField::constant({0.5}), InteractionKernel::bump(1, 0.5, 0.3),
                     total_mass(mu0) + h.P() * T, params);
  return {std::move(mu0), std::move(v), std::move(h), T, params};
}

}  // namespace gwass
