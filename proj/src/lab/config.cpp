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
#include "gwass/lab/config.hpp"

#include <cmath>
#include <set>

namespace gwass::lab {

namespace {

std::string join(const std::vector<std::string>& errors) {
  std::string s = "invalid config:";
  for (const auto& e : errors) s += "\n  " + e;
  return s;
}

class Reader {
 public:
  std::vector<std::string> errors;

  void fail(const std::string& where, const std::string& what) {
    errors.push_back(where + ": " + what);
  }

  std::optional<double> number(const json& obj, const std::string& key,
                               const std::string& where) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj[key].is_number()) {
      fail(where + "." + key, "must be a number");
      return std::nullopt;
    }
    return obj[key].get<double>();
  }

  double positive(const json& obj, const std::string& key, const std::string& where,
                  double fallback) {
    auto v = number(obj, key, where);
    if (!v) return fallback;
    if (!(*v > 0.0) || !std::isfinite(*v)) {
      fail(where + "." + key, "must be positive");
      return fallback;
    }
    return *v;
  }

  std::optional<int> integer(const json& obj, const std::string& key,
                             const std::string& where) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj[key].is_number_integer()) {
      fail(where + "." + key, "must be an integer");
      return std::nullopt;
    }
    return obj[key].get<int>();
  }

  std::optional<std::vector<double>> vector(const json& obj, const std::string& key,
                                            const std::string& where) {
    if (!obj.contains(key)) return std::nullopt;
    const auto& a = obj[key];
    if (!a.is_array()) {
      fail(where + "." + key, "must be an array of numbers");
      return std::nullopt;
    }
    std::vector<double> out;
    for (const auto& c : a) {
      if (!c.is_number()) {
        fail(where + "." + key, "must be an array of numbers");
        return std::nullopt;
      }
      out.push_back(c.get<double>());
    }
    return out;
  }

  void unknown_keys(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [k, _] : obj.items()) {
      if (!allowed.count(k)) fail(where + "." + k, "unknown field");
    }
  }

  std::optional<DiscreteMeasure> measure(const json& j, const std::string& where,
                                         const std::filesystem::path& base_dir) {
    try {
      if (j.is_object() && j.contains("file")) {
        if (!j["file"].is_string()) {
          fail(where + ".file", "must be a string");
          return std::nullopt;
        }
        std::filesystem::path path = j["file"].get<std::string>();
        if (path.is_relative()) path = base_dir / path;
        return read_measure_file(path);
      }
      return measure_from_json(j);
    } catch (const ParseError& e) {
      fail(where, e.what());
      return std::nullopt;
    }
  }

  Modulation modulation(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      fail(where, "needs a string \"kind\"");
      return Modulation::constant(1.0);
    }
    const std::string kind = j["kind"];
    if (kind == "constant") {
      unknown_keys(j, {"kind", "level"}, where);
      const double level = number(j, "level", where).value_or(1.0);
      if (!(level >= 0.0)) fail(where + ".level", "must be nonnegative");
      return Modulation::constant(std::max(0.0, level));
    }
    if (kind == "saturating") {
      unknown_keys(j, {"kind", "max_mass"}, where);
      if (!j.contains("max_mass")) fail(where + ".max_mass", "required");
      return Modulation::saturating(positive(j, "max_mass", where, 1.0));
    }
    fail(where + ".kind", "unknown modulation \"" + kind + "\"");
    return Modulation::constant(1.0);
  }
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

SimulationConfig parse_simulation_config(const json& j,
                                         const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError({"config: must be a JSON object"});
  Reader rd;
  rd.unknown_keys(j, {"preset", "initial", "field", "source", "T", "level", "levels",
                      "params", "ode_step", "max_level", "dependence"},
                  "config");

  std::optional<ReferenceProblem> ref;
  if (j.contains("preset")) {
    if (j["preset"] == "reference") {
      ref = reference_problem();
    } else {
      rd.fail("config.preset", "unknown preset (known: \"reference\")");
    }
  }

  // Initial measure.
  DiscreteMeasure mu0 = ref ? ref->mu0 : DiscreteMeasure(1);
  if (j.contains("initial")) {
    if (auto m = rd.measure(j["initial"], "config.initial", base_dir)) mu0 = *m;
  } else if (!ref) {
    rd.fail("config.initial", "required");
  }
  const int dim = mu0.dim();

  const double T = rd.positive(j, "T", "config", ref ? ref->T : 1.0);

  GwParams params = ref ? ref->params : GwParams{};
  if (j.contains("params")) {
    const auto& p = j["params"];
    if (!p.is_object()) {
      rd.fail("config.params", "must be an object");
    } else {
      rd.unknown_keys(p, {"a", "b", "p"}, "config.params");
      params.a = rd.number(p, "a", "config.params").value_or(params.a);
      params.b = rd.number(p, "b", "config.params").value_or(params.b);
      params.p = rd.number(p, "p", "config.params").value_or(params.p);
      try {
        params.validate();
      } catch (const std::invalid_argument& e) {
        rd.fail("config.params", e.what());
        params = GwParams{};
      }
    }
  }

  // Source.
  SourceModel source = ref ? ref->h : SourceModel::none(dim);
  if (j.contains("source")) {
    const auto& s = j["source"];
    const std::string where = "config.source";
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string()) {
      rd.fail(where, "needs a string \"kind\"");
    } else {
      const std::string kind = s["kind"];
      const Modulation mod = s.contains("modulation")
                                 ? rd.modulation(s["modulation"], where + ".modulation")
                                 : Modulation::constant(1.0);
      if (kind == "none") {
        rd.unknown_keys(s, {"kind"}, where);
        source = SourceModel::none(dim);
      } else if (kind == "bump_quadrature") {
        rd.unknown_keys(s, {"kind", "center", "half_width", "sites", "mass", "modulation"},
                        where);
        const double center = rd.number(s, "center", where).value_or(0.0);
        const double half = rd.positive(s, "half_width", where, 0.25);
        const int sites = rd.integer(s, "sites", where).value_or(10);
        const double mass = rd.number(s, "mass", where).value_or(0.2);
        if (sites < 1) rd.fail(where + ".sites", "must be at least 1");
        if (!(mass >= 0.0)) rd.fail(where + ".mass", "must be nonnegative");
        if (dim != 1) rd.fail(where, "bump_quadrature is one-dimensional");
        if (sites >= 1 && mass >= 0.0 && dim == 1) {
          source = SourceModel::bump_quadrature(center, half, sites, mass, mod);
        }
      } else if (kind == "cloud") {
        rd.unknown_keys(s, {"kind", "measure", "modulation"}, where);
        if (!s.contains("measure")) {
          rd.fail(where + ".measure", "required");
        } else if (auto m = rd.measure(s["measure"], where + ".measure", base_dir)) {
          if (m->dim() != dim) {
            rd.fail(where + ".measure", "dimension differs from the initial measure");
          } else {
            source = SourceModel(*m, mod);
          }
        }
      } else {
        rd.fail(where + ".kind", "unknown source \"" + kind + "\"");
      }
    }
  }

  // Field.
  std::optional<BaseField> base;
  std::optional<InteractionKernel> kernel;
  double mass_bound = -1.0;  // negative: derive from the source
  if (ref) {
    base = ref->v.base();
    kernel = ref->v.kernel();
  }
  if (j.contains("field")) {
    const auto& f = j["field"];
    const std::string where = "config.field";
    if (!f.is_object()) {
      rd.fail(where, "must be an object");
    } else {
      rd.unknown_keys(f, {"base", "kernel", "mass_bound"}, where);
      if (f.contains("base")) {
        const auto& b = f["base"];
        const std::string bw = where + ".base";
        const std::string kind = b.is_object() && b.contains("kind") && b["kind"].is_string()
                                     ? b["kind"].get<std::string>()
                                     : "";
        if (kind == "constant" || kind == "sine") {
          rd.unknown_keys(b, {"kind", "c", "rate", "waves"}, bw);
          BaseField bf;
          bf.offset = rd.vector(b, "c", bw).value_or(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
          if (kind == "sine") {
            bf.linear_rate = rd.number(b, "rate", bw).value_or(0.0);
            if (b.contains("waves") && b["waves"].is_array()) {
              std::size_t i = 0;
              for (const auto& w : b["waves"]) {
                const std::string ww = bw + ".waves[" + std::to_string(i++) + "]";
                if (!w.is_object()) {
                  rd.fail(ww, "must be an object");
                  continue;
                }
                SineWave s;
                s.amplitude = rd.vector(w, "amplitude", ww).value_or(std::vector<double>{});
                s.frequency = rd.vector(w, "frequency", ww).value_or(std::vector<double>{});
                s.phase = rd.number(w, "phase", ww).value_or(0.0);
                bf.waves.push_back(std::move(s));
              }
            } else if (b.contains("waves")) {
              rd.fail(bw + ".waves", "must be an array");
            }
          } else if (b.contains("rate") || b.contains("waves")) {
            rd.fail(bw, "constant base takes only \"c\"");
          }
          if (bf.dim() != dim) {
            rd.fail(bw + ".c", "must have " + std::to_string(dim) + " components");
          } else {
            try {
              bf.validate();
              base = bf;
            } catch (const std::invalid_argument& e) {
              rd.fail(bw, e.what());
            }
          }
        } else {
          rd.fail(bw + ".kind", "expected \"constant\" or \"sine\"");
        }
      } else if (!ref) {
        rd.fail(where + ".base", "required");
      }
      if (f.contains("kernel")) {
        const auto& k = f["kernel"];
        const std::string kw = where + ".kernel";
        const std::string kind = k.is_object() && k.contains("kind") && k["kind"].is_string()
                                     ? k["kind"].get<std::string>()
                                     : "";
        try {
          if (kind == "none") {
            rd.unknown_keys(k, {"kind"}, kw);
            kernel = InteractionKernel::none(dim);
          } else if (kind == "bump") {
            rd.unknown_keys(k, {"kind", "radius", "height", "direction"}, kw);
            kernel = InteractionKernel::bump(
                dim, rd.positive(k, "radius", kw, 0.5), rd.number(k, "height", kw).value_or(1.0),
                rd.vector(k, "direction", kw).value_or(std::vector<double>{}));
          } else if (kind == "repulsion") {
            rd.unknown_keys(k, {"kind", "radius", "height"}, kw);
            kernel = InteractionKernel::repulsion(dim, rd.positive(k, "radius", kw, 0.5),
                                                  rd.number(k, "height", kw).value_or(1.0));
          } else {
            rd.fail(kw + ".kind", "expected \"none\", \"bump\" or \"repulsion\"");
          }
        } catch (const std::invalid_argument& e) {
          rd.fail(kw, e.what());
        }
      }
      if (f.contains("mass_bound")) {
        if (auto m = rd.number(f, "mass_bound", where)) {
          if (*m >= 0.0) {
            mass_bound = *m;
          } else {
            rd.fail(where + ".mass_bound", "must be nonnegative");
          }
        }
      }
    }
  } else if (!ref) {
    rd.fail("config.field", "required");
  }
  if (!kernel) kernel = InteractionKernel::none(dim);

  const int level = rd.integer(j, "level", "config").value_or(5);
  if (!j.contains("level") && !ref && !j.contains("levels")) {
    rd.fail("config.level", "required");
  }
  if (level < 0) rd.fail("config.level", "must be nonnegative");
  std::optional<std::pair<int, int>> levels;
  if (j.contains("levels")) {
    const auto& l = j["levels"];
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() ||
        !l[1].is_number_integer()) {
      rd.fail("config.levels", "must be [k_min, k_max] integers");
    } else if (l[0].get<int>() < 0 || l[1].get<int>() <= l[0].get<int>()) {
      rd.fail("config.levels", "need 0 <= k_min < k_max");
    } else {
      levels = std::make_pair(l[0].get<int>(), l[1].get<int>());
    }
  }

  FlowConfig flow;
  flow.ode_step = rd.positive(j, "ode_step", "config", flow.ode_step);
  SchemeOptions scheme;
  scheme.max_level = rd.integer(j, "max_level", "config").value_or(scheme.max_level);
  scheme.p = params.p;
  if (level > scheme.max_level) rd.fail("config.level", "exceeds max_level");
  if (levels && levels->second > scheme.max_level) {
    rd.fail("config.levels", "k_max exceeds max_level");
  }

  std::optional<DiscreteMeasure> nu0;
  if (j.contains("dependence")) {
    const auto& d = j["dependence"];
    const std::string where = "config.dependence";
    if (!d.is_object()) {
      rd.fail(where, "must be an object");
    } else if (d.contains("shift")) {
      rd.unknown_keys(d, {"shift"}, where);
      if (auto s = rd.vector(d, "shift", where)) {
        if (s->size() != static_cast<std::size_t>(dim)) {
          rd.fail(where + ".shift", "must have " + std::to_string(dim) + " components");
        } else {
          nu0 = push_forward(mu0, [&](std::span<const double> x, std::span<double> out) {
            for (std::size_t c = 0; c < x.size(); ++c) out[c] = x[c] + (*s)[c];
          });
        }
      }
    } else if (d.contains("initial")) {
      rd.unknown_keys(d, {"initial"}, where);
      nu0 = rd.measure(d["initial"], where + ".initial", base_dir);
      if (nu0 && nu0->dim() != dim) {
        rd.fail(where + ".initial", "dimension differs from the initial measure");
        nu0.reset();
      }
    } else {
      rd.fail(where, "needs \"shift\" or \"initial\"");
    }
  }

  if (base && base->dim() != dim) rd.fail("config.field.base", "dimension differs from the initial measure");
  if (kernel->dim() != dim) rd.fail("config.field.kernel", "dimension differs from the initial measure");
  if (source.dim() != dim) rd.fail("config.source", "dimension differs from the initial measure");

  if (!rd.errors.empty()) throw ConfigError(rd.errors);

  double bound = total_mass(mu0) + source.P() * T;
  if (mass_bound >= 0.0) bound = mass_bound;
  try {
    VectorFieldModel field(*base, *kernel, bound, params);
    return SimulationConfig{std::move(mu0), std::move(field), std::move(source), T, level,
                            levels, params, flow, scheme, std::move(nu0)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError({std::string("config.field: ") + e.what()});
  }
}

SimulationConfig load_simulation_config(const std::filesystem::path& path) {
  json j;
  try {
    j = read_json_file(path);
  } catch (const ParseError& e) {
    throw ConfigError({e.what()});
  }
  return parse_simulation_config(j, path.parent_path().empty() ? "." : path.parent_path());
}

}  // namespace gwass::lab
