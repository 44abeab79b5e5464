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
#ifndef GWASS_LAB_SUITES_HPP_
#define GWASS_LAB_SUITES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwass/lab/report.hpp"

namespace gwass::lab {

inline constexpr std::uint64_t kDefaultSeed = 20260415;

/// The seed from GWASS_SEED if set and numeric, else kDefaultSeed.
std::uint64_t default_seed();

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name);
};

/// metric, examples, flows, scheme, prokhorov, metrization.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace gwass::lab

#endif  // GWASS_LAB_SUITES_HPP_
