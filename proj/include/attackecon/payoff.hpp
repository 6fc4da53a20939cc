#pragma once

// Two-phase attacker payoff model.
//
// Phase one is a perimeter compromise bought off the shelf: it always
// succeeds and yields a fraction alpha of the total value V at cost C1.
// Phase two (internal reconnaissance plus strike) succeeds with probability
// p2, yields the remaining (1 - alpha) V discounted by exp(-delta t), and
// costs C2 up front. The three ICS stages (penetrate, analyze, strike) map
// onto these two phases as {1} -> phase one, {2, 3} -> phase two.

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace attackecon {

/// Parameter set of the two-phase model. Construction validates every bound
/// and throws std::invalid_argument naming the offending field.
class ScenarioParams {
 public:
  ScenarioParams(double V, double alpha, double p2, double delta, double c1, double c2);

  double V() const noexcept { return V_; }
  double alpha() const noexcept { return alpha_; }
  double p2() const noexcept { return p2_; }
  double delta() const noexcept { return delta_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }

  ScenarioParams with_alpha(double alpha) const;
  ScenarioParams with_p2(double p2) const;
  ScenarioParams with_delta(double delta) const;

  /// Multiplies V, C1 and C2 by `factor`; the probability/rate fields are kept.
  ScenarioParams scaled_money(double factor) const;

  bool operator==(const ScenarioParams&) const = default;

 private:
  double V_, alpha_, p2_, delta_, c1_, c2_;
};

/// Money amount produced by the model. Always finite.
class Payoff {
 public:
  explicit Payoff(double value);
  double value() const noexcept { return value_; }

  auto operator<=>(const Payoff&) const = default;

 private:
  double value_;
};

enum class AttackerAction { NoAttack, PhaseOneOnly, TwoPhase };

std::string_view to_string(AttackerAction action) noexcept;

/// Outcome of a break-even search: a finite crossing time, no crossing at
/// all (the compared quantity is never favourable), or favourable for every
/// t >= 0 without a finite crossing.
struct BreakEven {
  enum class Kind { Finite, Never, Always };

  Kind kind;
  double t;  // meaningful only for Kind::Finite

  static BreakEven finite(double t) { return {Kind::Finite, t}; }
  static BreakEven never() { return {Kind::Never, 0.0}; }
  static BreakEven always() { return {Kind::Always, 0.0}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool operator==(const BreakEven&) const = default;
};

/// One stage of the N-stage generalisation.
struct StageSpec {
  double alpha;     // fraction of V released by this stage
  double p;         // success probability given the previous stage succeeded
  double cost;      // upfront, undiscounted
  double duration;  // time spent in this stage
};

// alpha V - C1.
Payoff phase_one_payoff(const ScenarioParams& params);

// p2 (1 - alpha) V exp(-delta t) - C2. Throws on negative or non-finite t.
Payoff phase_two_increment(const ScenarioParams& params, double t);

// alpha V - C1 + p2 (1 - alpha) V exp(-delta t) - C2, evaluated as
// phase_one_payoff + phase_two_increment so that sum holds bit-for-bit.
Payoff phase_two_payoff(const ScenarioParams& params, double t);

/// Pi1 - C2, the t -> infinity value of the two-phase payoff. Empty when the
/// discounted term never vanishes (delta = 0 with p2 (1 - alpha) V > 0).
std::optional<Payoff> limiting_payoff(const ScenarioParams& params);

/// d Pi2 / dt = -delta p2 (1 - alpha) V exp(-delta t).
double payoff_time_gradient(const ScenarioParams& params, double t);

/// Time at which two-phase stops beating phase-one-only.
BreakEven break_even_vs_phase_one(const ScenarioParams& params);

/// Time at which the two-phase payoff drops to zero.
BreakEven break_even_vs_zero(const ScenarioParams& params);

/// NoAttack when neither payoff is strictly positive, TwoPhase when Pi2 is
/// positive and strictly above Pi1, PhaseOneOnly otherwise (ties go to the
/// cheaper plan).
AttackerAction optimal_action(const ScenarioParams& params, double t);

/// Sum over stages of (prod_{j<=k} p_j) alpha_k V exp(-delta sum_{j<=k} t_j) - c_k.
Payoff multi_stage_payoff(double V, double delta, std::span<const StageSpec> stages);

/// Throws std::invalid_argument unless t is finite and non-negative.
void require_valid_time(double t);

}  // namespace attackecon
