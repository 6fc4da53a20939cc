#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "attackecon/montecarlo.hpp"
#include "mc_oracles.hpp"

using namespace attackecon;

TEST(RunMC, PointMassDegeneracyIsExact) {
  for (std::uint64_t n : {1u, 10u, 1000u}) {
    const MCResult r = run_mc(mc_oracle::all_point_config(0.5), 0.0, n, 7);
    EXPECT_EQ(r.n, n);
    EXPECT_EQ(r.mean_pi1, 400.0);
    EXPECT_EQ(r.mean_pi2, 600.0);
    EXPECT_EQ(r.ci95_pi2, 0.0);
    EXPECT_EQ(r.p_two_phase, 1.0);
    EXPECT_EQ(r.p_phase_one, 0.0);
    EXPECT_EQ(r.p_no_attack, 0.0);
  }
}

TEST(RunMC, DegeneracyMatchesPayoffCoreForInexactValues) {
  // Non-representable inputs: the running mean must still reproduce the
  // deterministic value bit-for-bit.
  ScenarioConfig cfg{PartialParams::from(ScenarioParams(977.3, 0.37, 0.61, 0.29, 13.1, 41.7))};
  cfg.distributions = {{ParamTarget::P2, PointMass{0.61}}};
  const ScenarioParams p = resolve(cfg);
  const MCResult r = run_mc(cfg, 3.3, 5000, 1);
  EXPECT_EQ(r.mean_pi1, phase_one_payoff(p).value());
  EXPECT_EQ(r.mean_pi2, phase_two_payoff(p, 3.3).value());
  const AttackerAction a = optimal_action(p, 3.3);
  EXPECT_EQ(r.p_two_phase, a == AttackerAction::TwoPhase ? 1.0 : 0.0);
  EXPECT_EQ(r.p_phase_one, a == AttackerAction::PhaseOneOnly ? 1.0 : 0.0);
  EXPECT_EQ(r.p_no_attack, a == AttackerAction::NoAttack ? 1.0 : 0.0);
}

TEST(RunMC, UniformP2MeanWithinThreeStandardErrors) {
  const MCResult r = run_mc(mc_oracle::uniform_p2_config(), 0.0, 200000, 42);
  EXPECT_LE(std::abs(r.mean_pi2 - mc_oracle::kUniformP2Mean), 3.0 * mc_oracle::standard_error(r));
  // sd of -300 + 1000 U(0,1) is 1000/sqrt(12).
  EXPECT_NEAR(mc_oracle::standard_error(r), 1000.0 / std::sqrt(12.0) / std::sqrt(200000.0), 0.01);
}

TEST(RunMC, UniformDeltaMatchesAnalyticAndQuadrature) {
  const long double analytic = mc_oracle::uniform_delta_mean_analytic();
  const long double quad = mc_oracle::uniform_delta_mean_midpoint();
  EXPECT_NEAR(static_cast<double>(analytic), 69.125834123437204, 1e-9);
  EXPECT_NEAR(static_cast<double>(quad), static_cast<double>(analytic), 1e-5);

  const MCResult r = run_mc(mc_oracle::uniform_delta_config(), 1.0, 200000, 43);
  EXPECT_NEAR(r.mean_pi2, static_cast<double>(analytic), 5.0);
  EXPECT_LE(std::abs(r.mean_pi2 - static_cast<double>(quad)), 3.0 * mc_oracle::standard_error(r));
}

TEST(RunMC, BetaSamplerMoments) {
  // Beta(2, 5) on alpha: mean 2/7. Pi1 = 1000 alpha - 100 is linear in it.
  ScenarioConfig cfg = mc_oracle::reference_config(0.0);
  cfg.distributions = {{ParamTarget::Alpha, BetaShape{2.0, 5.0}}};
  const MCResult r = run_mc(cfg, 0.0, 100000, 3);
  const double sd_pi1 = 1000.0 * std::sqrt(2.0 * 5.0 / (49.0 * 8.0));
  EXPECT_NEAR(r.mean_pi1, 1000.0 * 2.0 / 7.0 - 100.0, 4.0 * sd_pi1 / std::sqrt(100000.0));
}

TEST(RunMC, SamplesStayInBounds) {
  std::mt19937_64 rng(9);
  const ParamDistribution beta{ParamTarget::P2, BetaShape{0.3, 0.3}};
  const ParamDistribution uni{ParamTarget::Alpha, UniformRange{0.999999, 1.0}};
  for (int i = 0; i < 20000; ++i) {
    const double b = beta.sample(rng), u = uni.sample(rng);
    ASSERT_TRUE(b >= 0.0 && b <= 1.0);
    ASSERT_TRUE(u >= 0.999999 && u <= 1.0);
  }
}

TEST(RunMC, SeedDeterminism) {
  ScenarioConfig cfg = mc_oracle::reference_config(0.4);
  cfg.distributions = {{ParamTarget::P2, BetaShape{2, 2}},
                       {ParamTarget::Delta, UniformRange{0.1, 2.0}},
                       {ParamTarget::C2, UniformRange{50, 400}}};
  const MCResult a = run_mc(cfg, 1.5, 20000, 2024);
  const MCResult b = run_mc(cfg, 1.5, 20000, 2024);
  EXPECT_EQ(a, b);
  const MCResult c = run_mc(cfg, 1.5, 20000, 2025);
  EXPECT_NE(a.mean_pi2, c.mean_pi2);
}

TEST(RunMC, ProbabilitySimplex) {
  ScenarioConfig cfg = mc_oracle::reference_config(0.0);
  cfg.distributions = {{ParamTarget::Alpha, UniformRange{0, 1}},
                       {ParamTarget::P2, UniformRange{0, 1}},
                       {ParamTarget::Delta, UniformRange{0, 3}}};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MCResult r = run_mc(cfg, 1.0, 997, seed);
    for (double p : {r.p_no_attack, r.p_phase_one, r.p_two_phase}) {
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
    EXPECT_NEAR(r.p_no_attack + r.p_phase_one + r.p_two_phase, 1.0, 1e-12);
    EXPECT_GT(r.p_no_attack, 0.0);
    EXPECT_GT(r.p_phase_one, 0.0);
    EXPECT_GT(r.p_two_phase, 0.0);
  }
}

TEST(RunMC, Errors) {
  EXPECT_THROW(run_mc(mc_oracle::reference_config(0.5), 0.0, 0, 1), std::invalid_argument);
  EXPECT_THROW(run_mc(mc_oracle::reference_config(0.5), -1.0, 10, 1), std::invalid_argument);
  ScenarioConfig bad = mc_oracle::reference_config(0.5);
  bad.distributions = {{ParamTarget::P2, UniformRange{0.5, 2.0}}};
  EXPECT_THROW(run_mc(bad, 0.0, 10, 1), std::invalid_argument);
  ScenarioConfig dup = mc_oracle::reference_config(0.5);
  dup.distributions = {{ParamTarget::P2, PointMass{0.5}}, {ParamTarget::P2, PointMass{0.6}}};
  EXPECT_THROW(run_mc(dup, 0.0, 10, 1), std::invalid_argument);
  ScenarioConfig unresolved{};
  EXPECT_THROW(run_mc(unresolved, 0.0, 10, 1), std::invalid_argument);
}
