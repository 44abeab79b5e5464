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
#include "gwass/lab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gwass::lab {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check& SuiteReport::at_most(std::string id, std::string anchor, double lhs, double rhs,
                            double tolerance, std::string note) {
  const bool ok = lhs <= rhs + tolerance;
  checks.push_back({std::move(id), std::move(anchor), lhs, rhs, tolerance, ok, std::move(note)});
  return checks.back();
}

Check& SuiteReport::near(std::string id, std::string anchor, double lhs, double rhs,
                         double tolerance, std::string note) {
  const bool ok = std::abs(lhs - rhs) <= tolerance;
  checks.push_back({std::move(id), std::move(anchor), lhs, rhs, tolerance, ok, std::move(note)});
  return checks.back();
}

Check& SuiteReport::holds(std::string id, std::string anchor, bool condition,
                          std::string note) {
  checks.push_back({std::move(id), std::move(anchor), condition ? 1.0 : 0.0, 1.0, 0.0,
                    condition, std::move(note)});
  return checks.back();
}

namespace {

// JSON has no infinity; keep such values readable.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

json report_to_json(const SuiteReport& r, bool include_timing) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"id", c.id},   {"anchor", c.anchor},       {"lhs", number(c.lhs)},
              {"rhs", number(c.rhs)}, {"tolerance", number(c.tolerance)}, {"pass", c.pass}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  json constants = json::object();
  for (const auto& [k, v] : r.constants) constants[k] = number(v);
  json out = {{"suite", r.suite},     {"seed", r.seed},         {"pass", r.pass()},
              {"checks", checks},     {"constants", constants}, {"warnings", r.warnings}};
  if (include_timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

void print_report(std::ostream& os, const SuiteReport& r) {
  std::size_t width = 5;
  for (const auto& c : r.checks) width = std::max(width, c.id.size());
  char line[512];
  os << "suite " << r.suite << " (seed " << r.seed << ")\n";
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "  %-4s %-*s  lhs=%-13.6g rhs=%-13.6g tol=%-8.2g  %s\n",
                  c.pass ? "ok" : "FAIL", static_cast<int>(width), c.id.c_str(), c.lhs, c.rhs,
                  c.tolerance, c.anchor.c_str());
    os << line;
    if (!c.note.empty()) os << "       " << c.note << '\n';
  }
  if (!r.constants.empty()) {
    os << "  constants:";
    for (const auto& [k, v] : r.constants) os << ' ' << k << '=' << v;
    os << '\n';
  }
  for (const auto& w : r.warnings) os << "  warning: " << w << '\n';
  std::snprintf(line, sizeof line, "  %s: %zu checks, %.2f s\n", r.pass() ? "PASS" : "FAIL",
                r.checks.size(), r.wall_seconds);
  os << line;
}

}  // namespace gwass::lab
