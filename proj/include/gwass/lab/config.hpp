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
// Simulation config (JSON). Every field is optional when "preset" is
// "reference"; otherwise "initial", "field" and "level" are required.
//
//   {
//     "preset": "reference",
//     "initial": <measure> | {"file": "mu0.json"},
//     "field": {
//       "base":   {"kind": "constant", "c": [..]}
//               | {"kind": "sine", "c": [..], "rate": r,
//                  "waves": [{"amplitude": [..], "frequency": [..], "phase": f}]},
//       "kernel": {"kind": "none"}
//               | {"kind": "bump", "radius": r, "height": h, "direction": [..]}
//               | {"kind": "repulsion", "radius": r, "height": h},
//       "mass_bound": m            (default |mu_0| + P T)
//     },
//     "source": {"kind": "none"}
//             | {"kind": "bump_quadrature", "center": c, "half_width": w,
//                "sites": n, "mass": m, "modulation": <modulation>}
//             | {"kind": "cloud", "measure": <measure>, "modulation": <modulation>},
//     <modulation> = {"kind": "constant", "level": l}
//                  | {"kind": "saturating", "max_mass": m}
//     "T": 1.0, "level": 5, "levels": [3, 8],
//     "params": {"a": 1, "b": 1, "p": 1},
//     "ode_step": 0.01, "max_level": 14,
//     "dependence": {"shift": [..]} | {"initial": <measure>}
//   }

#ifndef GWASS_LAB_CONFIG_HPP_
#define GWASS_LAB_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gwass/dynamics.hpp"
#include "gwass/lab/io.hpp"

namespace gwass::lab {

/// Lists every invalid field at once.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

struct SimulationConfig {
  DiscreteMeasure mu0;
  VectorFieldModel field;
  SourceModel source;
  double T = 1.0;
  int level = 5;
  std::optional<std::pair<int, int>> levels;
  GwParams params;
  FlowConfig flow;
  SchemeOptions scheme;
  std::optional<DiscreteMeasure> nu0;  // second initial datum
};

/// Relative "file" entries are resolved against base_dir.
SimulationConfig parse_simulation_config(const json& j,
                                         const std::filesystem::path& base_dir = ".");

SimulationConfig load_simulation_config(const std::filesystem::path& path);

}  // namespace gwass::lab

#endif  // GWASS_LAB_CONFIG_HPP_
