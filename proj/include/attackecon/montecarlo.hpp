#pragma once

#include <cstdint>

#include "attackecon/archetypes.hpp"

namespace attackecon {

struct MCResult {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  double mean_pi1 = 0.0;
  double mean_pi2 = 0.0;
  double ci95_pi2 = 0.0;  // 1.96 s / sqrt(n), s the n-1 sample deviation
  double p_no_attack = 0.0;
  double p_phase_one = 0.0;
  double p_two_phase = 0.0;

  bool operator==(const MCResult&) const = default;
};

/// Draws `n` parameter vectors from the config's distributions (parameters
/// without one stay at their resolved value), evaluates both payoffs and the
/// optimal action at time `t`, and aggregates. Deterministic in
/// (config, t, n, seed). Throws std::invalid_argument for n == 0, invalid
/// distributions or an unresolvable config.
MCResult run_mc(const ScenarioConfig& config, double t, std::uint64_t n, std::uint64_t seed);

}  // namespace attackecon
