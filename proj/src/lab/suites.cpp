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
#include "gwass/lab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "gwass/dynamics.hpp"
#include "gwass/fields.hpp"
#include "gwass/flows.hpp"
#include "gwass/gw.hpp"
#include "gwass/transport.hpp"

namespace gwass::lab {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GWASS_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultSeed;
}

UnknownSuite::UnknownSuite(const std::string& name)
    : std::invalid_argument("unknown suite \"" + name + "\"") {}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"metric", "examples", "flows",
                                                 "scheme", "prokhorov", "metrization"};
  return names;
}

namespace {

// Independent stream per trial so trials can run in any order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Up to max_atoms atoms in [-2, 2]^d; some positions are copied from
// `share` so that supports overlap.
DiscreteMeasure random_measure(std::mt19937_64& rng, int dim, int max_atoms,
                               const DiscreteMeasure* share = nullptr) {
  DiscreteMeasure mu(dim);
  const int n = pick(rng, 0, max_atoms);
  std::vector<double> x(static_cast<std::size_t>(dim));
  for (int i = 0; i < n; ++i) {
    if (share && !share->empty() && pick(rng, 0, 3) == 0) {
      auto y = share->position(static_cast<std::size_t>(pick(rng, 0, static_cast<int>(share->size()) - 1)));
      x.assign(y.begin(), y.end());
    } else {
      for (auto& c : x) c = uniform(rng, -2.0, 2.0);
    }
    mu.add_atom(x, uniform(rng, 0.05, 2.0));
  }
  return mu;
}

DiscreteMeasure translate(const DiscreteMeasure& mu, std::span<const double> by) {
  return push_forward(mu, [&](std::span<const double> x, std::span<double> out) {
    for (std::size_t c = 0; c < x.size(); ++c) out[c] = x[c] + by[c];
  });
}

DiscreteMeasure line_measure(std::initializer_list<std::pair<double, double>> atoms) {
  DiscreteMeasure mu(1);
  for (const auto& [x, w] : atoms) mu.add_atom({x}, w);
  return mu;
}

// Relative excess of lhs over rhs.
double excess(double lhs, double rhs) {
  return (lhs - rhs) / std::max(1.0, std::abs(rhs));
}

void put_constants(SuiteReport& r, const HypothesisConstants& c) {
  r.constants = {{"L", c.L}, {"M", c.M}, {"N", c.N},  {"P", c.P},  {"R", c.R},
                 {"Q", c.Q}, {"m", c.m}, {"C1", c.C1}, {"C2", c.C2}};
}

// ---------------------------------------------------------------- metric

struct MetricTrial {
  double symmetry = 0.0, triangle = 0.0, lower = 0.0, upper = 0.0;
  double scaling = 0.0, subadditivity = 0.0, witness = 0.0;
  double self_distance = 0.0;
  bool identity_ok = true;
  double truncation_p1 = 0.0;  // arc length minus 2a/b, p = 1 only
  int truncation_p2_violations = 0;
};

MetricTrial metric_trial(std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, trial);
  const int dim = pick(rng, 1, 3);
  GwParams prm;
  prm.a = std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
  prm.b = std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
  prm.p = pick(rng, 1, 2);
  const DiscreteMeasure mu = random_measure(rng, dim, 8);
  const DiscreteMeasure nu = random_measure(rng, dim, 8, &mu);
  const DiscreteMeasure rho = random_measure(rng, dim, 8, &nu);
  const DiscreteMeasure sigma = random_measure(rng, dim, 8, &rho);
  const double k = uniform(rng, 0.0, 4.0);

  MetricTrial t;
  const GwResult mn = gw_distance(mu, nu, prm);
  const double nm = gw_distance(nu, mu, prm).value;
  const double nr = gw_distance(nu, rho, prm).value;
  const double mr = gw_distance(mu, rho, prm).value;
  const double rs = gw_distance(rho, sigma, prm).value;
  const double mass_mu = total_mass(mu);
  const double mass_nu = total_mass(nu);

  t.symmetry = std::abs(mn.value - nm) / std::max(1.0, mn.value);
  t.triangle = excess(mr, mn.value + nr);
  t.lower = excess(prm.a * std::abs(mass_mu - mass_nu), mn.value);
  t.upper = excess(mn.value, prm.a * (mass_mu + mass_nu));
  t.scaling = excess(gw_distance(scale(mu, k), scale(nu, k), prm).value,
                     std::max(std::pow(k, 1.0 / prm.p), k) * mn.value);
  t.subadditivity = excess(gw_distance(add(mu, rho), add(nu, sigma), prm).value, mn.value + rs);
  t.witness = std::abs(mn.value - mn.recompute(prm)) / std::max(1.0, mn.value);

  // A reordered copy is the same measure.
  DiscreteMeasure shuffled(dim);
  for (std::size_t i = mu.size(); i-- > 0;) shuffled.add_atom(mu.position(i), mu.weight(i));
  t.self_distance = gw_distance(mu, shuffled, prm).value;
  const bool same = same_measure(mu, nu);
  t.identity_ok = same ? mn.value <= 1e-9 : mn.value > 1e-12;

  const double reach = 2.0 * prm.a / prm.b;
  if (prm.p == 1.0) {
    t.truncation_p1 = mn.max_arc_length() - reach;
  } else if (mn.max_arc_length() > reach + 1e-9) {
    t.truncation_p2_violations = 1;
  }
  return t;
}

SuiteReport metric_suite(std::uint64_t seed) {
  constexpr int kTrials = 1000;
  SuiteReport r;
  std::vector<MetricTrial> trials(kTrials);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kTrials; ++i) trials[static_cast<std::size_t>(i)] = metric_trial(seed, static_cast<std::uint64_t>(i));

  MetricTrial worst;
  worst.truncation_p1 = -1e300;
  int identity_failures = 0;
  int p2_violations = 0;
  for (const auto& t : trials) {
    worst.symmetry = std::max(worst.symmetry, t.symmetry);
    worst.triangle = std::max(worst.triangle, t.triangle);
    worst.lower = std::max(worst.lower, t.lower);
    worst.upper = std::max(worst.upper, t.upper);
    worst.scaling = std::max(worst.scaling, t.scaling);
    worst.subadditivity = std::max(worst.subadditivity, t.subadditivity);
    worst.witness = std::max(worst.witness, t.witness);
    worst.self_distance = std::max(worst.self_distance, t.self_distance);
    worst.truncation_p1 = std::max(worst.truncation_p1, t.truncation_p1);
    identity_failures += t.identity_ok ? 0 : 1;
    p2_violations += t.truncation_p2_violations;
  }
  const std::string n = std::to_string(kTrials) + " random trials, worst case";
  const double tol = 1e-9;
  r.at_most("symmetry", "gw(mu,nu) = gw(nu,mu)", worst.symmetry, 0.0, tol, n);
  r.at_most("triangle", "gw(mu,rho) <= gw(mu,nu) + gw(nu,rho)", worst.triangle, 0.0, tol, n);
  r.at_most("mass_lower", "a||mu|-|nu|| <= gw(mu,nu)", worst.lower, 0.0, tol, n);
  r.at_most("mass_upper", "gw(mu,nu) <= a(|mu|+|nu|)", worst.upper, 0.0, tol, n);
  r.at_most("scaling", "gw(k mu,k nu) <= max{k^{1/p},k} gw(mu,nu)", worst.scaling, 0.0, tol, n);
  r.at_most("subadditivity", "gw(mu1+mu2,nu1+nu2) <= gw(mu1,nu1) + gw(mu2,nu2)",
            worst.subadditivity, 0.0, tol, n);
  r.at_most("witness", "value = a|mu-mu~| + a|nu-nu~| + b W_p(mu~,nu~)", worst.witness, 0.0,
            tol, n);
  r.at_most("permutation", "gw(mu, reordered mu) = 0", worst.self_distance, 0.0, tol, n);
  r.holds("identity", "gw(mu,nu) = 0 iff mu = nu", identity_failures == 0,
          std::to_string(identity_failures) + " failures");
  r.at_most("truncation_p1", "transport arcs no longer than 2a/b", worst.truncation_p1, 0.0,
            tol, "p = 1 trials, worst arc length minus 2a/b");
  if (p2_violations > 0) {
    r.warnings.push_back(std::to_string(p2_violations) +
                         " p = 2 trials transport mass farther than 2a/b");
  }
  r.constants["truncation_p2_violations"] = p2_violations;
  return r;
}

// -------------------------------------------------------------- examples

// min over y in [0, 1] of 2 - 2y + xy + y^2.
double box_closed_form(double x) {
  const double y = std::clamp((2.0 - x) / 2.0, 0.0, 1.0);
  return 2.0 - 2.0 * y + x * y + y * y;
}

DiscreteMeasure box_measure(double lo, int n) {
  DiscreteMeasure mu(1);
  for (int i = 0; i < n; ++i) mu.add_atom({lo + (i + 0.5) / n}, 1.0 / n);
  return mu;
}

SuiteReport examples_suite() {
  SuiteReport r;
  const auto d0 = DiscreteMeasure::dirac({0.0});

  double worst = 0.0;
  for (double a : {0.5, 1.0, 2.0}) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (int s = 1; s <= 50; ++s) {
        const double x = 0.1 * s;
        const double v = gw_distance(d0, DiscreteMeasure::dirac({x}), {a, b, 1.0}).value;
        worst = std::max(worst, std::abs(v - std::min(2.0 * a, b * x)));
      }
    }
  }
  r.at_most("dirac_grid", "gw(delta_0, delta_x) = min{2a,bx}", worst, 0.0, 1e-9,
            "a, b in {0.5, 1, 2}, x = 0.1..5, worst error");
  r.near("dirac_tie", "gw(delta_0, delta_2) = min{2a,bx} at bx = 2a",
         gw_distance(d0, DiscreteMeasure::dirac({2.0}), {}).value, 2.0, 1e-12);
  r.near("tv_dirac", "|delta_0 - delta_x| = 2", tv_distance(d0, DiscreteMeasure::dirac({0.7})),
         2.0, 0.0);
  for (double p : {1.0, 2.0, 3.0}) {
    r.near("wp_dirac_p" + std::to_string(static_cast<int>(p)), "W_p(delta_0, delta_x) = x",
           wasserstein(d0, DiscreteMeasure::dirac({1.7}), p).value, 1.7, 1e-12);
  }

  const auto two = line_measure({{1.0, 2.0}});
  const auto split = line_measure({{0.0, 1.0}, {2.0, 1.0}});
  const WpResult w1 = wasserstein(two, split, 1.0);
  r.near("w1_split", "W_1(2 delta_1, delta_0 + delta_2) = 2", w1.value, 2.0, 1e-12);
  r.holds("monge_split", "a single source atom must be split", w1.plan.entries.size() >= 2);
  r.holds("w1_certificate", "dual potentials certify optimality", w1.certificate.certifies(1e-9));
  r.near("w2_scaled", "W_2(4 delta_0, 4 delta_3) = 4^{1/2} 3",
         wasserstein(line_measure({{0.0, 4.0}}), line_measure({{3.0, 4.0}}), 2.0).value, 6.0,
         1e-12);
  const auto [lhs, rhs] =
      wasserstein_scaling_check(d0, DiscreteMeasure::dirac({3.0}), 4.0, 2.0);
  r.near("wp_scaling", "W_p(k mu, k nu) = k^{1/p} W_p(mu, nu)", lhs, rhs, 1e-12);
  r.near("gw_split", "gw(2 delta_1, delta_0 + delta_2) = min{2b, 4a, b + 2a}",
         gw_distance(two, split, {}).value, 2.0, 1e-12);
  r.near("gw_zero", "gw(0, nu) = a|nu|",
         gw_distance(DiscreteMeasure(1), line_measure({{0.0, 1.0}}), {2.0, 1.0, 1.0}).value,
         2.0, 1e-12);
  r.near("oracle_vertex", "brute force reaches the all-removal vertex",
         gw_brute_force(d0, DiscreteMeasure::dirac({3.0}), {}, 50), 2.0, 1e-12);

  for (double x : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    const GwResult g = gw_distance(box_measure(-1.0, 200), box_measure(x, 200), {});
    r.near("box_x" + std::to_string(x).substr(0, 3), "min_y 2 - 2y + xy + y^2, y = (2-x)/2",
           g.value, box_closed_form(x), 0.02, "200 atoms per box");
  }

  r.near("lp_close", "d_LP = d_2 when d_2 <= 1/2",
         levy_prokhorov_1d(d0, line_measure({{-0.2, 0.5}, {0.4, 0.5}})), 0.4, 1e-12);
  r.near("lp_split", "d_LP = sup{1/2, d_1} when d_1 <= 1 <= d_2",
         levy_prokhorov_1d(d0, line_measure({{-0.3, 0.5}, {1.5, 0.5}})), 0.5, 1e-12);
  return r;
}

// ----------------------------------------------------------------- flows

struct FlowTrial {
  double contraction = 0.0, displacement = 0.0, perturbation = 0.0;
};

VectorFieldModel random_model(std::mt19937_64& rng, int dim, const GwParams& prm) {
  BaseField base;
  base.offset.resize(static_cast<std::size_t>(dim));
  for (auto& c : base.offset) c = uniform(rng, -1.0, 1.0);
  const int waves = pick(rng, 0, 2);
  for (int w = 0; w < waves; ++w) {
    SineWave s;
    for (int c = 0; c < dim; ++c) {
      s.amplitude.push_back(uniform(rng, -0.5, 0.5));
      s.frequency.push_back(uniform(rng, -2.0, 2.0));
    }
    s.phase = uniform(rng, 0.0, 6.28);
    base.waves.push_back(std::move(s));
  }
  const double radius = uniform(rng, 0.3, 1.5);
  const double height = uniform(rng, -0.5, 0.5);
  InteractionKernel kernel = pick(rng, 0, 1) == 0 ? InteractionKernel::bump(dim, radius, height)
                                                  : InteractionKernel::repulsion(dim, radius, height);
  return VectorFieldModel(base, kernel, 20.0, prm);
}

FlowTrial flow_trial(std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_rng(seed, trial);
  const int dim = pick(rng, 1, 3);
  GwParams prm;
  prm.a = uniform(rng, 0.2, 3.0);
  prm.b = uniform(rng, 0.2, 3.0);
  prm.p = pick(rng, 1, 2);
  const VectorFieldModel model = random_model(rng, dim, prm);
  DiscreteMeasure frozen = random_measure(rng, dim, 10);
  frozen = scale(frozen, total_mass(frozen) > 0 ? std::min(1.0, 5.0 / total_mass(frozen)) : 1.0);
  const FrozenField v = model.freeze(frozen);

  BaseField shifted = model.base();
  for (auto& c : shifted.offset) c += uniform(rng, -0.3, 0.3);
  const VectorFieldModel other(shifted, model.kernel(), model.mass_bound(), prm);
  const FrozenField w = other.freeze(frozen);

  const DiscreteMeasure mu = random_measure(rng, dim, 20);
  const DiscreteMeasure nu = random_measure(rng, dim, 20, &mu);
  const double t = uniform(rng, 0.0, 1.0);
  FlowConfig cfg;
  cfg.ode_step = 1e-2;
  const FlowEstimateReport rep = flow_estimate_report(v, w, mu, nu, t, prm, cfg);
  return {excess(rep.contraction.lhs, rep.contraction.rhs),
          excess(rep.displacement.lhs, rep.displacement.rhs),
          excess(rep.perturbation.lhs, rep.perturbation.rhs)};
}

SuiteReport flows_suite(std::uint64_t seed) {
  constexpr int kTrials = 100;
  SuiteReport r;
  std::vector<FlowTrial> trials(kTrials);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kTrials; ++i) trials[static_cast<std::size_t>(i)] = flow_trial(seed, static_cast<std::uint64_t>(i));
  FlowTrial worst{-1e300, -1e300, -1e300};
  for (const auto& t : trials) {
    worst.contraction = std::max(worst.contraction, t.contraction);
    worst.displacement = std::max(worst.displacement, t.displacement);
    worst.perturbation = std::max(worst.perturbation, t.perturbation);
  }
  const std::string n = std::to_string(kTrials) + " random fields and measures, worst excess";
  r.at_most("contraction", "gw(Fv mu, Fv nu) <= e^{((p+1)/p)Lt} gw(mu,nu)", worst.contraction,
            0.0, 1e-6, n);
  r.at_most("displacement", "gw(mu, Fv mu) <= b t |v| |mu|^{1/p}", worst.displacement, 0.0,
            1e-6, n);
  r.at_most("perturbation",
            "gw(Fv mu, Fw nu) <= e^{((p+1)/p)Lt} gw(mu,nu) + b|mu|^{1/p} e^{Lt/p}(e^{Lt}-1)/L |v-w|",
            worst.perturbation, 0.0, 1e-6, n);

  // Constant field on a Dirac: the displacement bound is attained.
  const VectorFieldModel constant(BaseField::constant({0.8}), InteractionKernel::none(1), 1.0);
  FlowConfig cfg;
  const auto d0 = DiscreteMeasure::dirac({0.0});
  const auto moved = flow_pushforward(constant, d0, d0, 1.5, cfg);
  r.near("constant_exact", "gw(delta_0, delta_{ct}) = t|c| when bt|c| <= 2a",
         gw_distance(d0, moved, {}).value, 1.2, 1e-12);

  // Linear field x' = x from x = 1.
  BaseField lin = BaseField::constant({0.0});
  lin.linear_rate = 1.0;
  const VectorFieldModel linear(lin, InteractionKernel::none(1), 1.0);
  FlowConfig fine;
  fine.ode_step = 1e-3;
  const auto grown = flow_pushforward(linear, DiscreteMeasure::dirac({1.0}), d0, 1.0, fine);
  r.near("linear_rk4", "x' = x gives e^t", grown.position(0)[0], std::exp(1.0), 1e-10);

  // Semigroup and mass conservation on the reference field.
  const ReferenceProblem ref = reference_problem();
  const FrozenField v = ref.v.freeze(ref.mu0);
  const auto a = flow_pushforward(v, flow_pushforward(v, ref.mu0, 0.3, fine), 0.2, fine);
  const auto b = flow_pushforward(v, ref.mu0, 0.5, fine);
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a.position(i)[0] - b.position(i)[0]));
  r.at_most("semigroup", "F_s F_t = F_{s+t}", gap, 0.0, 1e-9);
  r.near("mass", "|Fv mu| = |mu|", total_mass(b), total_mass(ref.mu0), 0.0);

  std::vector<DiscreteMeasure> tests = {ref.mu0, DiscreteMeasure(1),
                                        scale(ref.mu0, ref.v.mass_bound())};
  const ConstantSpotCheck spot = spot_check_constants(ref.v, tests, 7, 2000, 3.0);
  r.at_most("spot_L", "|v[mu](x) - v[mu](y)| <= L|x - y|", spot.max_lipschitz_ratio,
            ref.v.constants().L, 1e-9);
  r.at_most("spot_M", "|v[mu](x)| <= M", spot.max_speed, ref.v.constants().M, 1e-9);
  return r;
}

// ---------------------------------------------------------------- scheme

SuiteReport scheme_suite() {
  SuiteReport r;
  const ReferenceProblem ref = reference_problem();
  const FlowConfig cfg;
  const HypothesisConstants c = hypothesis_constants(ref.v, ref.h, total_mass(ref.mu0), ref.T, 1.0);
  put_constants(r, c);

  const CauchyTable table =
      cauchy_table(ref.mu0, ref.v, ref.h, ref.T, 3, 8, ref.params, cfg);
  for (const auto& row : table.rows) {
    r.at_most("cauchy_k" + std::to_string(row.level), "D_k <= 2 C_2 2^{-k}", row.D, row.bound, 0.0);
  }
  r.at_most("cauchy_slope", "log2 D_k decays with slope near -1", table.slope, -0.8, 0.0);
  double partial = 0.0;
  for (const auto& row : table.rows) partial += row.D;
  r.at_most("cauchy_sum", "sum_k D_k <= 4 C_2 / 2^{k_min}", partial,
            4.0 * c.C2 * std::ldexp(1.0, -3), 0.0);

  const Trajectory traj = sample_and_hold(ref.mu0, ref.v, ref.h, ref.T, 5, cfg);
  r.holds("snapshots", "2^k + 1 grid times", traj.snapshots.size() == 33);
  double mass_excess = -1e300, step_excess = -1e300, prev_mass = 0.0;
  bool nondecreasing = true;
  for (std::size_t n = 0; n < traj.snapshots.size(); ++n) {
    const auto& s = traj.snapshots[n];
    const double mass = total_mass(s.mu);
    mass_excess = std::max(mass_excess, mass - (total_mass(ref.mu0) + s.t * c.P));
    if (n > 0) {
      nondecreasing = nondecreasing && mass >= prev_mass;
      const double g = gw_value(traj.snapshots[n - 1].mu, s.mu, ref.params);
      step_excess = std::max(step_excess, g - traj.dt * (c.M * c.m + c.P));
    }
    prev_mass = mass;
  }
  r.at_most("mass_audit", "|mu_t| <= |mu_0| + t P", mass_excess, 0.0, 1e-12);
  r.holds("mass_monotone", "mass is nondecreasing with a positive source", nondecreasing);
  r.at_most("step_difference", "gw(mu_t, mu_s) <= |t-s|(Mm+P)", step_excess, 0.0, 1e-9);
  r.at_most("source_support", "supp h[mu] in B_R(0)",
            support_radius(ref.h.evaluate(ref.mu0)), c.R, 0.0);

  const Trajectory finer = sample_and_hold(ref.mu0, ref.v, ref.h, ref.T, 6, cfg);
  r.holds("dyadic_start", "levels agree at t = 0", finer.snapshots[0].mu == traj.snapshots[0].mu);

  const double eps = 0.05;
  const auto nu0 = translate(ref.mu0, std::vector<double>{eps});
  const DependenceTable dep =
      continuous_dependence_check(ref.mu0, nu0, ref.v, ref.h, ref.T, 6, ref.params, cfg);
  double worst = -1e300;
  for (const auto& row : dep.rows) worst = std::max(worst, row.distance - row.bound);
  r.at_most("dependence", "gw(mu_t,nu_t) <= e^{t(2L+2mN+Q+1)} gw(mu_0,nu_0)", worst, 0.0, 1e-9,
            "shift 0.05, level 6, worst excess over grid times");

  // Exactly solvable cases.
  const VectorFieldModel drift(BaseField::constant({0.7}), InteractionKernel::none(1), 2.0);
  const Trajectory moved = sample_and_hold(ref.mu0, drift, SourceModel::none(1), 1.0, 4, cfg);
  r.holds("translation", "h = 0, v = c gives mu_0 translated by cT",
          same_measure(moved.snapshots.back().mu, translate(ref.mu0, std::vector<double>{0.7})));
  const VectorFieldModel still(BaseField::constant({0.0}), InteractionKernel::none(1), 2.0);
  const Trajectory filled = sample_and_hold(ref.mu0, still, ref.h, 1.0, 4, cfg);
  bool linear_growth = true;
  for (const auto& s : filled.snapshots) {
    linear_growth = linear_growth &&
                    same_measure(s.mu, add(ref.mu0, scale(ref.h.cloud(), s.t)), kDefaultQuantum, 1e-12);
  }
  r.holds("source_only", "v = 0 gives mu_t = mu_0 + t h", linear_growth);
  r.warnings = table.warnings;
  return r;
}

// ------------------------------------------------------------- prokhorov

SuiteReport prokhorov_suite() {
  SuiteReport r;
  struct Case {
    const char* regime;
    double d1, d2, p, lp, gw;
  };
  auto wp = [](double d1, double d2, double p) {
    return std::pow(0.5 * std::pow(d1, p) + 0.5 * std::pow(d2, p), 1.0 / p);
  };
  // Remove the far half at cost a (1/2 + 1/2), move the near half by d_1.
  auto split = [](double d1, double p) { return 0.5 + std::pow(2.0, -1.0 / p) * d1; };
  const std::vector<Case> cases = {
      {"far", 1.2, 2.0, 1, 1.0, 1.0},
      {"far", 1.2, 2.0, 2, 1.0, 1.0},
      {"split", 0.3, 1.5, 1, 0.5, split(0.3, 1)},
      {"split", 0.3, 1.5, 2, 0.5, split(0.3, 2)},
      {"split", 0.8, 1.2, 1, 0.8, split(0.8, 1)},
      {"near", 0.2, 0.8, 1, 0.5, wp(0.2, 0.8, 1)},
      {"near", 0.2, 0.8, 2, 0.5, wp(0.2, 0.8, 2)},
      {"near", 0.7, 0.9, 1, 0.7, wp(0.7, 0.9, 1)},
      {"close", 0.1, 0.4, 1, 0.4, wp(0.1, 0.4, 1)},
      {"close", 0.1, 0.4, 2, 0.4, wp(0.1, 0.4, 2)},
  };
  const auto d0 = DiscreteMeasure::dirac({0.0});
  for (const auto& cs : cases) {
    const auto nu = line_measure({{-cs.d1, 0.5}, {cs.d2, 0.5}});
    const std::string id = std::string(cs.regime) + "_d" + std::to_string(cs.d1).substr(0, 3) +
                           "_" + std::to_string(cs.d2).substr(0, 3) + "_p" +
                           std::to_string(static_cast<int>(cs.p));
    const char* lp_anchor = cs.lp == cs.d2 && cs.d2 <= 0.5 ? "d_LP = d_2" : "d_LP = sup{1/2, d_1}";
    if (std::string(cs.regime) == "far") lp_anchor = "d_LP = 1";
    r.near(id + "_lp", lp_anchor, levy_prokhorov_1d(d0, nu), cs.lp, 1e-9);
    const char* gw_anchor = std::string(cs.regime) == "far"     ? "gw = 1"
                            : std::string(cs.regime) == "split" ? "gw = 1/2 + 2^{-1/p} d_1"
                                                                : "gw = W_p";
    r.near(id + "_gw", gw_anchor, gw_distance(d0, nu, {0.5, 1.0, cs.p}).value, cs.gw, 1e-9);
  }
  r.near("identity", "d_LP(mu, mu) = 0", levy_prokhorov_1d(d0, d0), 0.0, 0.0);
  return r;
}

// ----------------------------------------------------------- metrization

SuiteReport metrization_suite() {
  SuiteReport r;
  const auto d0 = DiscreteMeasure::dirac({0.0});
  double worst_gw = -1e300, worst_w1 = 0.0;
  bool monotone = true;
  double previous = 1e300;
  double last = 0.0;
  for (int k = 2; k <= 50; ++k) {
    const double kk = k;
    const auto mu = line_measure({{0.0, 1.0 - 1.0 / kk}, {kk, 1.0 / kk}});
    const double g = gw_distance(mu, d0, {}).value;
    worst_gw = std::max(worst_gw, g - 2.0 / kk);
    worst_w1 = std::max(worst_w1, std::abs(wasserstein(mu, d0, 1.0).value - 1.0));
    monotone = monotone && g < previous;
    previous = g;
    last = g;
  }
  r.at_most("gw_bound", "gw(mu_k, delta_0) <= 2a/k", worst_gw, 0.0, 1e-12,
            "k = 2..50, worst excess");
  r.holds("gw_monotone", "gw(mu_k, delta_0) decreases to 0", monotone);
  r.at_most("gw_tail", "gw(mu_50, delta_0) small", last, 0.04, 1e-12);
  r.at_most("w1_constant", "W_1(mu_k, delta_0) = 1", worst_w1, 0.0, 1e-12, "k = 2..50");
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "metric") {
    r = metric_suite(seed);
  } else if (name == "examples") {
    r = examples_suite();
  } else if (name == "flows") {
    r = flows_suite(seed);
  } else if (name == "scheme") {
    r = scheme_suite();
  } else if (name == "prokhorov") {
    r = prokhorov_suite();
  } else if (name == "metrization") {
    r = metrization_suite();
  } else {
    throw UnknownSuite(name);
  }
  r.suite = name;
  r.seed = seed;
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace gwass::lab
