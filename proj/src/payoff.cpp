#include "attackecon/payoff.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace attackecon {

namespace {

[[noreturn]] void reject(const char* field, const std::string& rule, double value) {
  std::ostringstream msg;
  msg << field << " must be " << rule << ", got " << value;
  throw std::invalid_argument(msg.str());
}

void require_finite(const char* field, double value) {
  if (!std::isfinite(value)) reject(field, "a finite number", value);
}

void require_non_negative(const char* field, double value) {
  require_finite(field, value);
  if (value < 0.0) reject(field, ">= 0", value);
}

void require_unit_interval(const char* field, double value) {
  require_finite(field, value);
  if (value < 0.0 || value > 1.0) reject(field, "in [0, 1]", value);
}

// p2 (1 - alpha) V: the undiscounted phase-two gain.
double phase_two_gain(const ScenarioParams& p) { return p.p2() * (1.0 - p.alpha()) * p.V(); }

}  // namespace

ScenarioParams::ScenarioParams(double V, double alpha, double p2, double delta, double c1,
                               double c2)
    : V_(V), alpha_(alpha), p2_(p2), delta_(delta), c1_(c1), c2_(c2) {
  require_non_negative("V", V);
  require_unit_interval("alpha", alpha);
  require_unit_interval("p2", p2);
  require_non_negative("delta", delta);
  require_non_negative("C1", c1);
  require_non_negative("C2", c2);
}

ScenarioParams ScenarioParams::with_alpha(double alpha) const {
  return {V_, alpha, p2_, delta_, c1_, c2_};
}

ScenarioParams ScenarioParams::with_p2(double p2) const {
  return {V_, alpha_, p2, delta_, c1_, c2_};
}

ScenarioParams ScenarioParams::with_delta(double delta) const {
  return {V_, alpha_, p2_, delta, c1_, c2_};
}

ScenarioParams ScenarioParams::scaled_money(double factor) const {
  return {V_ * factor, alpha_, p2_, delta_, c1_ * factor, c2_ * factor};
}

Payoff::Payoff(double value) : value_(value) {
  if (!std::isfinite(value)) throw std::overflow_error("payoff is not finite");
}

std::string_view to_string(AttackerAction action) noexcept {
  switch (action) {
    case AttackerAction::NoAttack:
      return "NoAttack";
    case AttackerAction::PhaseOneOnly:
      return "PhaseOneOnly";
    case AttackerAction::TwoPhase:
      return "TwoPhase";
  }
  return "?";
}

void require_valid_time(double t) {
  require_non_negative("t", t);
}

Payoff phase_one_payoff(const ScenarioParams& params) {
  return Payoff(params.alpha() * params.V() - params.c1());
}

Payoff phase_two_increment(const ScenarioParams& params, double t) {
  require_valid_time(t);
  return Payoff(phase_two_gain(params) * std::exp(-params.delta() * t) - params.c2());
}

Payoff phase_two_payoff(const ScenarioParams& params, double t) {
  return Payoff(phase_one_payoff(params).value() + phase_two_increment(params, t).value());
}

std::optional<Payoff> limiting_payoff(const ScenarioParams& params) {
  if (params.delta() == 0.0 && phase_two_gain(params) > 0.0) return std::nullopt;
  return Payoff(phase_one_payoff(params).value() - params.c2());
}

double payoff_time_gradient(const ScenarioParams& params, double t) {
  require_valid_time(t);
  return -params.delta() * phase_two_gain(params) * std::exp(-params.delta() * t);
}

BreakEven break_even_vs_phase_one(const ScenarioParams& params) {
  const double gain = phase_two_gain(params);
  if (gain <= params.c2()) return BreakEven::never();
  // gain > C2 from here on: the increment is positive at t = 0.
  if (params.delta() == 0.0 || params.c2() == 0.0) return BreakEven::always();
  return BreakEven::finite(std::log(gain / params.c2()) / params.delta());
}

BreakEven break_even_vs_zero(const ScenarioParams& params) {
  const double gain = phase_two_gain(params);
  const double required = params.c1() + params.c2() - params.alpha() * params.V();

  if (params.delta() == 0.0) {
    // Constant in t; the sign at t = 0 decides.
    return gain - required > 0.0 ? BreakEven::always() : BreakEven::never();
  }
  if (required < 0.0) return BreakEven::always();
  if (required == 0.0) return gain > 0.0 ? BreakEven::always() : BreakEven::never();
  if (required >= gain) return BreakEven::never();
  return BreakEven::finite(std::log(gain / required) / params.delta());
}

AttackerAction optimal_action(const ScenarioParams& params, double t) {
  const Payoff pi1 = phase_one_payoff(params);
  const Payoff pi2 = phase_two_payoff(params, t);
  const Payoff zero(0.0);
  if (pi1 <= zero && pi2 <= zero) return AttackerAction::NoAttack;
  if (pi2 > zero && pi2 > pi1) return AttackerAction::TwoPhase;
  return AttackerAction::PhaseOneOnly;
}

Payoff multi_stage_payoff(double V, double delta, std::span<const StageSpec> stages) {
  require_non_negative("V", V);
  require_non_negative("delta", delta);
  if (stages.empty()) throw std::invalid_argument("stage list must not be empty");

  double alpha_sum = 0.0;
  for (const StageSpec& s : stages) {
    require_unit_interval("stage alpha", s.alpha);
    require_unit_interval("stage p", s.p);
    require_non_negative("stage cost", s.cost);
    require_non_negative("stage duration", s.duration);
    alpha_sum += s.alpha;
  }
  // Slack absorbs rounding in splits such as {alpha, 1 - alpha}.
  if (alpha_sum > 1.0 + 4.0 * DBL_EPSILON) reject("sum of stage alphas", "<= 1", alpha_sum);

  double reach = 1.0;
  double elapsed = 0.0;
  double total = 0.0;
  for (const StageSpec& s : stages) {
    reach *= s.p;
    elapsed += s.duration;
    total += reach * s.alpha * V * std::exp(-delta * elapsed) - s.cost;
  }
  return Payoff(total);
}

}  // namespace attackecon
