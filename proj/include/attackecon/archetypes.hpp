#pragma once

// Attacker presets and scenario files.
//
// A scenario is resolved in three layers, later layers winning field by
// field: base values (the scenario file), archetype overrides, explicit
// overrides (command-line flags).

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "attackecon/distribution.hpp"
#include "attackecon/payoff.hpp"

namespace attackecon {

/// Any subset of the six model parameters.
struct PartialParams {
  std::optional<double> V, alpha, p2, delta, c1, c2;

  std::optional<double>& operator[](ParamTarget target);
  const std::optional<double>& operator[](ParamTarget target) const;

  /// Copies every field that is set in `top` over this one.
  void overlay(const PartialParams& top);

  bool empty() const;

  /// Requires all six fields; throws std::invalid_argument naming the first
  /// missing one, or the first out-of-bounds one.
  ScenarioParams complete() const;

  static PartialParams from(const ScenarioParams& params);

  bool operator==(const PartialParams&) const = default;
};

enum class AttackClass { Commodified, Tailored };

std::string_view to_string(AttackClass c) noexcept;

struct Archetype {
  std::string name;
  PartialParams overrides;
  std::string description;
  // Descriptive only; never read by the model.
  AttackClass phase_one_class = AttackClass::Commodified;
  AttackClass phase_two_class = AttackClass::Tailored;
};

/// nation-state, criminal, hacktivist, in ascending delta. The numbers are
/// illustrative defaults; only their ordering carries meaning.
std::span<const Archetype> builtin_archetypes();

/// Throws std::invalid_argument for names outside the registry.
const Archetype& find_archetype(std::string_view name);

struct ScenarioConfig {
  PartialParams base;
  std::optional<std::string> archetype;
  PartialParams overrides;
  std::vector<ParamDistribution> distributions;  // at most one per target
  std::optional<double> t;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Base, then archetype, then explicit overrides; the merge is validated.
ScenarioParams resolve(const ScenarioConfig& config);

/// Missing file, malformed JSON or a schema violation (unknown key, wrong
/// type). Out-of-range values raise std::invalid_argument instead.
class ScenarioFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ScenarioConfig parse_scenario(std::string_view json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario (pretty-printed, keys in schema order).
std::string serialize_scenario(const ScenarioConfig& config);

}  // namespace attackecon
