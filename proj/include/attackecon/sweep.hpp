#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "attackecon/payoff.hpp"

namespace attackecon {

/// Inclusive, uniformly spaced lattice over (alpha, t). The alpha of `base`
/// is ignored; every row substitutes its own.
struct SweepSpec {
  ScenarioParams base;
  double alpha_min = 0.0;
  double alpha_max = 1.0;
  std::size_t alpha_steps = 11;
  double t_min = 0.0;
  double t_max = 5.0;
  std::size_t t_steps = 11;

  /// Throws std::invalid_argument on inverted/out-of-range bounds or fewer
  /// than two steps on either axis.
  void validate() const;

  double alpha_at(std::size_t i) const;
  double t_at(std::size_t j) const;
};

struct RegionCell {
  double alpha;
  double t;
  double pi1;
  double pi2;
  AttackerAction action;

  bool operator==(const RegionCell&) const = default;
};

struct SweepGrid {
  SweepSpec spec;
  std::vector<RegionCell> cells;  // row-major: alpha outer, t inner, both ascending

  const RegionCell& at(std::size_t alpha_index, std::size_t t_index) const {
    return cells[alpha_index * spec.t_steps + t_index];
  }
};

struct FrontierPoint {
  double alpha;
  std::optional<double> t_last_two_phase;
};

/// Evaluates every lattice cell. Rows may be split across `threads` workers;
/// the result is identical for any thread count.
SweepGrid run_sweep(const SweepSpec& spec, unsigned threads = 1);

/// For each alpha row, the largest grid t still labelled TwoPhase.
std::vector<FrontierPoint> action_frontier(const SweepGrid& grid);

}  // namespace attackecon
