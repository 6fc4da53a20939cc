#pragma once

#include <random>
#include <string_view>
#include <variant>

namespace attackecon {

/// Model parameter a distribution can be attached to.
enum class ParamTarget { Alpha, P2, Delta, V, C1, C2 };

inline constexpr ParamTarget kAllTargets[] = {ParamTarget::Alpha, ParamTarget::P2,
                                              ParamTarget::Delta, ParamTarget::V,
                                              ParamTarget::C1,    ParamTarget::C2};

/// Scenario-file key of the target ("alpha", "p2", "delta", "V", "C1", "C2").
std::string_view key_of(ParamTarget target) noexcept;

/// Inverse of key_of; throws std::invalid_argument for unknown keys.
ParamTarget target_from_key(std::string_view key);

struct PointMass {
  double v;
  bool operator==(const PointMass&) const = default;
};

struct UniformRange {
  double a;
  double b;
  bool operator==(const UniformRange&) const = default;
};

struct BetaShape {
  double a;
  double b;
  bool operator==(const BetaShape&) const = default;
};

struct ParamDistribution {
  ParamTarget target;
  std::variant<PointMass, UniformRange, BetaShape> kind;

  /// Throws std::invalid_argument when the support can leave the target's
  /// admissible range. Beta is accepted for alpha, p2 and delta only.
  void validate() const;

  double sample(std::mt19937_64& rng) const;

  bool operator==(const ParamDistribution&) const = default;
};

}  // namespace attackecon
