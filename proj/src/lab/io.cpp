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
#include "gwass/lab/io.hpp"

#include <cstdio>
#include <sstream>

namespace gwass::lab {

DiscreteMeasure measure_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("measure must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("measure needs an integer \"dim\"");
  }
  const int dim = j["dim"].get<int>();
  if (dim <= 0) throw ParseError("measure \"dim\" must be positive");
  if (!j.contains("atoms") || !j["atoms"].is_array()) {
    throw ParseError("measure needs an \"atoms\" array");
  }
  DiscreteMeasure mu(dim);
  std::size_t index = 0;
  for (const auto& atom : j["atoms"]) {
    const std::string where = "atom " + std::to_string(index++);
    if (!atom.is_object() || !atom.contains("x") || !atom.contains("w")) {
      throw ParseError(where + ": expected {\"x\": [...], \"w\": ...}");
    }
    const auto& x = atom["x"];
    if (!x.is_array() || x.size() != static_cast<std::size_t>(dim)) {
      throw ParseError(where + ": \"x\" must hold " + std::to_string(dim) + " numbers");
    }
    std::vector<double> pos;
    for (const auto& c : x) {
      if (!c.is_number()) throw ParseError(where + ": coordinates must be numbers");
      pos.push_back(c.get<double>());
    }
    if (!atom["w"].is_number()) throw ParseError(where + ": \"w\" must be a number");
    try {
      mu.add_atom(pos, atom["w"].get<double>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return mu;
}

json measure_to_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    auto x = mu.position(i);
    atoms.push_back({{"x", std::vector<double>(x.begin(), x.end())}, {"w", mu.weight(i)}});
  }
  return {{"dim", mu.dim()}, {"atoms", atoms}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

DiscreteMeasure read_measure_file(const std::filesystem::path& path) {
  try {
    return measure_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0 || msg.rfind("cannot open", 0) == 0) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

void write_measure_file(const std::filesystem::path& path, const DiscreteMeasure& mu) {
  write_json_file(path, measure_to_json(mu));
}

json plan_to_json(const TransportPlan& plan) {
  json entries = json::array();
  for (const auto& e : plan.entries) entries.push_back({e.source, e.target, e.flow});
  return entries;
}

json gw_result_to_json(const GwResult& r, const GwParams& params) {
  return {{"value", r.value},
          {"params", {{"a", params.a}, {"b", params.b}, {"p", params.p}}},
          {"removed_source_mass", r.removed_source_mass},
          {"removed_target_mass", r.removed_target_mass},
          {"transport_cost", r.transport_cost},
          {"kept_source", measure_to_json(r.kept_source)},
          {"kept_target", measure_to_json(r.kept_target)},
          {"plan", plan_to_json(r.plan)}};
}

json wp_result_to_json(const WpResult& r) {
  return {{"value", r.value},
          {"p", r.p},
          {"plan", plan_to_json(r.plan)},
          {"certificate",
           {{"primal", r.certificate.primal},
            {"dual", r.certificate.dual},
            {"max_infeasibility", r.certificate.max_infeasibility},
            {"max_slackness", r.certificate.max_slackness}}}};
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> header)
    : out_(path), columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot write " + path.string());
  for (std::size_t c = 0; c < header.size(); ++c) out_ << (c ? "," : "") << header[c];
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::vector<double>(values));
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_) throw std::logic_error("CSV row width mismatch");
  char buf[32];
  for (std::size_t c = 0; c < values.size(); ++c) {
    std::snprintf(buf, sizeof buf, "%.17g", values[c]);
    out_ << (c ? "," : "") << buf;
  }
  out_ << '\n';
}

}  // namespace gwass::lab
