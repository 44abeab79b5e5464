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
// Sample-and-hold Lagrangian scheme on dyadic grids.
//
// At level k the step is dt = T / 2^k and
//   mu_{(n+1)dt} = F_{dt}[mu_{n dt}] # mu_{n dt} + dt h[mu_{n dt}],
// where F_s[mu] is the time-s flow of v[mu] frozen at mu. Between grid
// times, mu_{n dt + s} = F_s[mu_{n dt}] # mu_{n dt} + s h[mu_{n dt}].

#ifndef GWASS_DYNAMICS_HPP_
#define GWASS_DYNAMICS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "gwass/fields.hpp"
#include "gwass/flows.hpp"
#include "gwass/gw.hpp"
#include "gwass/measure.hpp"

namespace gwass {

/// Scalar factor applied to the source as a function of total mass.
struct Modulation {
  enum class Kind { kConstant, kSaturating };
  Kind kind = Kind::kConstant;
  double level = 1.0;           // kConstant: the factor
  double saturation_mass = 1.0; // kSaturating: max(0, 1 - |mu| / saturation_mass)

  static Modulation constant(double level) { return {Kind::kConstant, level, 1.0}; }
  static Modulation saturating(double saturation_mass) {
    return {Kind::kSaturating, 1.0, saturation_mass};
  }

  double operator()(double mass) const;
  double max_value() const;
  double lipschitz() const;  // in the mass argument
  void validate() const;
};

/// h[mu] = modulation(|mu|) * cloud, with the cloud fixed.
class SourceModel {
 public:
  SourceModel(DiscreteMeasure cloud, Modulation modulation);

  /// No source in dimension dim.
  static SourceModel none(int dim);

  /// Midpoint quadrature of (1 - ((x - center)/half_width)^2)^2 on
  /// [center - half_width, center + half_width] with `sites` atoms, scaled
  /// to total mass `mass`. One-dimensional.
  static SourceModel bump_quadrature(double center, double half_width, int sites,
                                     double mass, Modulation modulation);

  int dim() const { return cloud_.dim(); }
  const DiscreteMeasure& cloud() const { return cloud_; }
  const Modulation& modulation() const { return modulation_; }

  DiscreteMeasure evaluate(const DiscreteMeasure& mu) const;

  double P() const;  // mass bound
  double R() const;  // support radius
  /// gw(h[mu], h[nu]) <= Q gw(mu, nu): only the mass changes, and
  /// a ||mu| - |nu|| <= gw(mu, nu).
  double Q() const;

 private:
  DiscreteMeasure cloud_;
  Modulation modulation_;
};

struct HypothesisConstants {
  double L = 0.0, M = 0.0, N = 0.0;
  double P = 0.0, R = 0.0, Q = 0.0;
  double m = 0.0;  // (|mu_0| + P T)^{1/p}
  double C1 = 0.0; // 5L + 4mN + Q
  double C2 = 0.0; // mN(Mm + P) + MP/4
};

HypothesisConstants hypothesis_constants(const VectorFieldModel& v,
                                         const SourceModel& h,
                                         double initial_mass, double T, double p);

struct Snapshot {
  double t = 0.0;
  DiscreteMeasure mu;
};

struct Trajectory {
  int level = 0;
  double T = 1.0;
  double dt = 1.0;
  std::vector<Snapshot> snapshots;  // 2^level + 1 grid times
  HypothesisConstants constants;
  std::vector<std::string> warnings;
};

struct SchemeOptions {
  int max_level = 14;
  double p = 1.0;  // exponent used for the mass constant m
};

/// Builds the full trajectory at dyadic level k. Throws std::length_error if
/// k exceeds options.max_level.
Trajectory sample_and_hold(const DiscreteMeasure& mu0, const VectorFieldModel& v,
                           const SourceModel& h, double T, int k,
                           const FlowConfig& cfg, const SchemeOptions& options = {});

/// The scheme's measure at an arbitrary time in [0, T].
DiscreteMeasure evaluate_at(const Trajectory& traj, const VectorFieldModel& v,
                            const SourceModel& h, double t, const FlowConfig& cfg);

struct CauchyRow {
  int level = 0;
  double D = 0.0;      // max over shared grid times of gw(mu^k, mu^{k+1})
  double bound = 0.0;  // 2 C2 2^{-k} T^2
  double worst_time = 0.0;
};

struct CauchyTable {
  std::vector<CauchyRow> rows;  // levels k_min .. k_max - 1
  double slope = 0.0;           // least-squares slope of log2 D_k against k
  HypothesisConstants constants;
  std::vector<std::string> warnings;
};

/// Runs levels k_min..k_max and compares consecutive ones on the coarser
/// grid.
CauchyTable cauchy_table(const DiscreteMeasure& mu0, const VectorFieldModel& v,
                         const SourceModel& h, double T, int k_min, int k_max,
                         const GwParams& params, const FlowConfig& cfg,
                         const SchemeOptions& options = {});

struct DependenceRow {
  double t = 0.0;
  double distance = 0.0;
  double bound = 0.0;
};

struct DependenceTable {
  std::vector<DependenceRow> rows;
  double rate = 0.0;  // ((p+1)/p) L + 2mN + Q + 1
  HypothesisConstants constants;
  std::vector<std::string> warnings;
};

/// gw(mu_t, nu_t) against e^{rate t} gw(mu_0, nu_0) on the level-k grid.
DependenceTable continuous_dependence_check(const DiscreteMeasure& mu0,
                                            const DiscreteMeasure& nu0,
                                            const VectorFieldModel& v,
                                            const SourceModel& h, double T, int k,
                                            const GwParams& params,
                                            const FlowConfig& cfg,
                                            const SchemeOptions& options = {});

/// Least-squares slope of log2(values) against levels; zero entries are
/// skipped.
double log2_slope(const std::vector<int>& levels, const std::vector<double>& values);

/// d = 1, mu_0 = 40 equal atoms at the cell midpoints of [-1, 0] with mass
/// 1; v[mu] = 0.5 + 0.3 sum w K(x - y) with K a bump of radius 0.5; h a
/// 10-site quadrature of a bump on [-0.25, 0.25] with mass 0.2 and constant
/// modulation; T = 1, a = b = p = 1. The field's mass bound is |mu_0| + P T.
struct ReferenceProblem {
  DiscreteMeasure mu0;
  VectorFieldModel v;
  SourceModel h;
  double T;
  GwParams params;
};

ReferenceProblem reference_problem();

}  // namespace gwass

#endif  // GWASS_DYNAMICS_HPP_
