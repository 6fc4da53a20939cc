#include "attackecon/archetypes.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace attackecon {

namespace {

using Json = nlohmann::ordered_json;

PartialParams preset(double delta, double p2) {
  PartialParams p;
  p.delta = delta;
  p.p2 = p2;
  return p;
}

const std::array<Archetype, 3>& registry() {
  static const std::array<Archetype, 3> presets{{
      {"nation-state", preset(0.05, 0.9),
       "patient well-resourced actor with ready SCADA tooling; discount rate near zero"},
      {"criminal", preset(0.8, 0.6),
       "profit-driven group; moderate patience and moderate phase-two capability"},
      {"hacktivist", preset(2.0, 0.4),
       "low-resource actor chasing quick visible impact; largely skips phase two"},
  }};
  return presets;
}

void check_bounds(ParamTarget target, double value) {
  const bool unit = target == ParamTarget::Alpha || target == ParamTarget::P2;
  if (!std::isfinite(value) || value < 0.0 || (unit && value > 1.0)) {
    std::ostringstream msg;
    msg << key_of(target) << " must be " << (unit ? "in [0, 1]" : ">= 0") << ", got " << value;
    throw std::invalid_argument(msg.str());
  }
}

[[noreturn]] void schema_error(const std::string& what) {
  throw ScenarioFileError("scenario schema: " + what);
}

double number_field(const Json& value, const std::string& key) {
  if (!value.is_number()) schema_error("\"" + key + "\" must be a number");
  return value.get<double>();
}

void parse_params(const Json& object, PartialParams& out, const std::string& where) {
  if (!object.is_object()) schema_error("\"" + where + "\" must be an object");
  for (const auto& [key, value] : object.items()) {
    ParamTarget target;
    try {
      target = target_from_key(key);
    } catch (const std::invalid_argument&) {
      schema_error("unknown key \"" + key + "\" in " + where);
    }
    const double x = number_field(value, key);
    check_bounds(target, x);
    out[target] = x;
  }
}

ParamDistribution parse_distribution(const std::string& key, const Json& spec) {
  ParamTarget target;
  try {
    target = target_from_key(key);
  } catch (const std::invalid_argument&) {
    schema_error("unknown distribution target \"" + key + "\"");
  }
  if (!spec.is_object()) schema_error("distribution \"" + key + "\" must be an object");
  if (!spec.contains("kind") || !spec["kind"].is_string())
    schema_error("distribution \"" + key + "\" needs a string \"kind\"");

  const std::string kind = spec["kind"].get<std::string>();
  std::set<std::string> allowed;
  if (kind == "point") {
    allowed = {"kind", "v"};
  } else if (kind == "uniform" || kind == "beta") {
    allowed = {"kind", "a", "b"};
  } else {
    schema_error("distribution \"" + key + "\" has unknown kind \"" + kind + "\"");
  }
  for (const auto& [field, _] : spec.items())
    if (!allowed.contains(field))
      schema_error("unknown key \"" + field + "\" in distribution \"" + key + "\"");
  for (const std::string& field : allowed)
    if (!spec.contains(field))
      schema_error("distribution \"" + key + "\" is missing \"" + field + "\"");

  ParamDistribution dist{target, PointMass{0.0}};
  if (kind == "point") {
    dist.kind = PointMass{number_field(spec["v"], key + ".v")};
  } else {
    const double a = number_field(spec["a"], key + ".a");
    const double b = number_field(spec["b"], key + ".b");
    if (kind == "uniform")
      dist.kind = UniformRange{a, b};
    else
      dist.kind = BetaShape{a, b};
  }
  dist.validate();
  return dist;
}

Json params_to_json(const PartialParams& params) {
  Json out = Json::object();
  for (ParamTarget target : kAllTargets)
    if (params[target]) out[std::string(key_of(target))] = *params[target];
  return out;
}

}  // namespace

std::optional<double>& PartialParams::operator[](ParamTarget target) {
  return const_cast<std::optional<double>&>(std::as_const(*this)[target]);
}

const std::optional<double>& PartialParams::operator[](ParamTarget target) const {
  switch (target) {
    case ParamTarget::Alpha: return alpha;
    case ParamTarget::P2: return p2;
    case ParamTarget::Delta: return delta;
    case ParamTarget::V: return V;
    case ParamTarget::C1: return c1;
    case ParamTarget::C2: return c2;
  }
  throw std::logic_error("bad ParamTarget");
}

void PartialParams::overlay(const PartialParams& top) {
  for (ParamTarget target : kAllTargets)
    if (top[target]) (*this)[target] = top[target];
}

bool PartialParams::empty() const {
  for (ParamTarget target : kAllTargets)
    if ((*this)[target]) return false;
  return true;
}

ScenarioParams PartialParams::complete() const {
  for (ParamTarget target : kAllTargets)
    if (!(*this)[target])
      throw std::invalid_argument("missing parameter \"" + std::string(key_of(target)) + "\"");
  return ScenarioParams(*V, *alpha, *p2, *delta, *c1, *c2);
}

PartialParams PartialParams::from(const ScenarioParams& params) {
  return PartialParams{params.V(),     params.alpha(), params.p2(),
                       params.delta(), params.c1(),    params.c2()};
}

std::string_view to_string(AttackClass c) noexcept {
  return c == AttackClass::Commodified ? "commodified" : "tailored";
}

std::span<const Archetype> builtin_archetypes() { return registry(); }

const Archetype& find_archetype(std::string_view name) {
  for (const Archetype& a : registry())
    if (a.name == name) return a;
  throw std::invalid_argument("unknown archetype \"" + std::string(name) + "\"");
}

ScenarioParams resolve(const ScenarioConfig& config) {
  PartialParams merged = config.base;
  if (config.archetype) merged.overlay(find_archetype(*config.archetype).overrides);
  merged.overlay(config.overrides);
  return merged.complete();
}

ScenarioConfig parse_scenario(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ScenarioFileError(std::string("malformed scenario document: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");

  ScenarioConfig config;
  Json base = Json::object();
  for (const auto& [key, value] : doc.items()) {
    if (key == "archetype") {
      if (!value.is_string()) schema_error("\"archetype\" must be a string");
      config.archetype = value.get<std::string>();
    } else if (key == "t") {
      const double t = number_field(value, key);
      if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("t must be >= 0");
      config.t = t;
    } else if (key == "distributions") {
      if (!value.is_object()) schema_error("\"distributions\" must be an object");
      for (const auto& [target, spec] : value.items())
        config.distributions.push_back(parse_distribution(target, spec));
    } else if (key == "overrides") {
      parse_params(value, config.overrides, "overrides");
    } else {
      base[key] = value;
    }
  }
  parse_params(base, config.base, "scenario");
  return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioFileError("cannot open scenario file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

std::string serialize_scenario(const ScenarioConfig& config) {
  Json doc = params_to_json(config.base);
  if (config.archetype) doc["archetype"] = *config.archetype;
  if (config.t) doc["t"] = *config.t;
  if (!config.distributions.empty()) {
    Json dists = Json::object();
    for (const ParamDistribution& d : config.distributions) {
      Json entry;
      if (const auto* p = std::get_if<PointMass>(&d.kind)) {
        entry = {{"kind", "point"}, {"v", p->v}};
      } else if (const auto* u = std::get_if<UniformRange>(&d.kind)) {
        entry = {{"kind", "uniform"}, {"a", u->a}, {"b", u->b}};
      } else {
        const auto& b = std::get<BetaShape>(d.kind);
        entry = {{"kind", "beta"}, {"a", b.a}, {"b", b.b}};
      }
      dists[std::string(key_of(d.target))] = entry;
    }
    doc["distributions"] = dists;
  }
  if (!config.overrides.empty()) doc["overrides"] = params_to_json(config.overrides);
  return doc.dump(2) + "\n";
}

}  // namespace attackecon
