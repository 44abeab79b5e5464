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
#ifndef GWASS_LAB_REPORT_HPP_
#define GWASS_LAB_REPORT_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "gwass/lab/io.hpp"

namespace gwass::lab {

/// One verified statement: lhs compared to rhs within tolerance.
struct Check {
  std::string id;
  std::string anchor;  // the formula being checked
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  std::map<std::string, double> constants;
  std::vector<std::string> warnings;
  double wall_seconds = 0.0;

  bool pass() const;

  /// lhs <= rhs + tolerance.
  Check& at_most(std::string id, std::string anchor, double lhs, double rhs,
                 double tolerance, std::string note = {});
  /// |lhs - rhs| <= tolerance.
  Check& near(std::string id, std::string anchor, double lhs, double rhs,
              double tolerance, std::string note = {});
  /// Boolean condition, recorded as lhs = 1/0 against rhs = 1.
  Check& holds(std::string id, std::string anchor, bool condition, std::string note = {});
};

/// Wall time is included only on request so that reports stay
/// byte-identical across runs.
json report_to_json(const SuiteReport& r, bool include_timing = false);

void print_report(std::ostream& os, const SuiteReport& r);

}  // namespace gwass::lab

#endif  // GWASS_LAB_REPORT_HPP_
