#include "attackecon/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace attackecon {

namespace {

double lattice_point(double lo, double hi, std::size_t steps, std::size_t i) {
  return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(steps - 1);
}

void evaluate_rows(const SweepSpec& spec, std::vector<RegionCell>& cells, std::size_t row_begin,
                   std::size_t row_end) {
  for (std::size_t i = row_begin; i < row_end; ++i) {
    const ScenarioParams params = spec.base.with_alpha(spec.alpha_at(i));
    for (std::size_t j = 0; j < spec.t_steps; ++j) {
      const double t = spec.t_at(j);
      cells[i * spec.t_steps + j] = RegionCell{params.alpha(), t,
                                               phase_one_payoff(params).value(),
                                               phase_two_payoff(params, t).value(),
                                               optimal_action(params, t)};
    }
  }
}

}  // namespace

void SweepSpec::validate() const {
  if (!(std::isfinite(alpha_min) && std::isfinite(alpha_max)) || alpha_min < 0.0 ||
      alpha_max > 1.0 || alpha_min > alpha_max)
    throw std::invalid_argument("alpha range must satisfy 0 <= alpha_min <= alpha_max <= 1");
  if (!(std::isfinite(t_min) && std::isfinite(t_max)) || t_min < 0.0 || t_min > t_max)
    throw std::invalid_argument("t range must satisfy 0 <= t_min <= t_max (finite)");
  if (alpha_steps < 2) throw std::invalid_argument("alpha_steps must be >= 2");
  if (t_steps < 2) throw std::invalid_argument("t_steps must be >= 2");
}

double SweepSpec::alpha_at(std::size_t i) const {
  return lattice_point(alpha_min, alpha_max, alpha_steps, i);
}

double SweepSpec::t_at(std::size_t j) const { return lattice_point(t_min, t_max, t_steps, j); }

SweepGrid run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  SweepGrid grid{spec, {}};
  grid.cells.resize(spec.alpha_steps * spec.t_steps,
                    RegionCell{0.0, 0.0, 0.0, 0.0, AttackerAction::NoAttack});

  const std::size_t rows = spec.alpha_steps;
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, rows);
  if (workers == 1) {
    evaluate_rows(spec, grid.cells, 0, rows);
    return grid;
  }

  // Each worker owns a contiguous block of rows and writes only its slots.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (rows + workers - 1) / workers;
  for (std::size_t begin = 0; begin < rows; begin += chunk) {
    const std::size_t end = std::min(rows, begin + chunk);
    pool.emplace_back([&spec, &grid, begin, end] { evaluate_rows(spec, grid.cells, begin, end); });
  }
  pool.clear();
  return grid;
}

std::vector<FrontierPoint> action_frontier(const SweepGrid& grid) {
  std::vector<FrontierPoint> frontier;
  frontier.reserve(grid.spec.alpha_steps);
  for (std::size_t i = 0; i < grid.spec.alpha_steps; ++i) {
    FrontierPoint point{grid.at(i, 0).alpha, std::nullopt};
    for (std::size_t j = 0; j < grid.spec.t_steps; ++j) {
      const RegionCell& cell = grid.at(i, j);
      if (cell.action == AttackerAction::TwoPhase) point.t_last_two_phase = cell.t;
    }
    frontier.push_back(point);
  }
  return frontier;
}

}  // namespace attackecon
