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
// JSON and CSV interchange.
//
// Measure format: {"dim": d, "atoms": [{"x": [..d reals..], "w": real}, ...]}

#ifndef GWASS_LAB_IO_HPP_
#define GWASS_LAB_IO_HPP_

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwass/gw.hpp"
#include "gwass/measure.hpp"
#include "gwass/transport.hpp"

namespace gwass::lab {

using nlohmann::json;

/// Malformed input file or document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DiscreteMeasure measure_from_json(const json& j);
json measure_to_json(const DiscreteMeasure& mu);

DiscreteMeasure read_measure_file(const std::filesystem::path& path);
void write_measure_file(const std::filesystem::path& path, const DiscreteMeasure& mu);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

json plan_to_json(const TransportPlan& plan);
json gw_result_to_json(const GwResult& r, const GwParams& params);
json wp_result_to_json(const WpResult& r);

/// Writes a header row, then one row per call. Doubles are printed with
/// 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);
  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

}  // namespace gwass::lab

#endif  // GWASS_LAB_IO_HPP_
