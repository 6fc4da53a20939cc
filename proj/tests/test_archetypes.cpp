#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "attackecon/archetypes.hpp"

using namespace attackecon;

namespace {

PartialParams reference_base(double alpha = 0.3) {
  return PartialParams::from(ScenarioParams(1000, alpha, 0.8, 0.8, 100, 200));
}

std::string error_of(std::string_view json) {
  try {
    parse_scenario(json);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Archetypes, RegistryShapeAndOrdering) {
  const auto presets = builtin_archetypes();
  ASSERT_EQ(presets.size(), 3u);
  const Archetype& nation = find_archetype("nation-state");
  const Archetype& criminal = find_archetype("criminal");
  const Archetype& hacktivist = find_archetype("hacktivist");
  EXPECT_LT(*nation.overrides.delta, *criminal.overrides.delta);
  EXPECT_LT(*criminal.overrides.delta, *hacktivist.overrides.delta);
  EXPECT_GT(*nation.overrides.p2, *criminal.overrides.p2);
  EXPECT_GT(*criminal.overrides.p2, *hacktivist.overrides.p2);
  for (const Archetype& a : presets) {
    EXPECT_EQ(a.phase_one_class, AttackClass::Commodified);
    EXPECT_EQ(a.phase_two_class, AttackClass::Tailored);
    EXPECT_EQ(a.description.find(','), std::string::npos);
  }
  EXPECT_THROW(find_archetype("apt99"), std::invalid_argument);
}

TEST(Archetypes, AllResolveAgainstReferenceBase) {
  for (const Archetype& a : builtin_archetypes()) {
    ScenarioConfig cfg{reference_base()};
    cfg.archetype = a.name;
    EXPECT_NO_THROW(resolve(cfg)) << a.name;
  }
}

TEST(Archetypes, NationStateStillPrefersTwoPhaseLate) {
  ScenarioConfig cfg{reference_base(0.3)};
  cfg.archetype = "nation-state";
  const ScenarioParams p = resolve(cfg);
  // 0.9 * 700 * e^{-0.25} - 200
  EXPECT_NEAR(phase_two_increment(p, 5.0).value(), 290.64449333498507, 1e-9);
  EXPECT_EQ(optimal_action(p, 5.0), AttackerAction::TwoPhase);
}

TEST(Resolve, ArchetypeOverridesBase) {
  ScenarioConfig cfg{reference_base()};
  cfg.archetype = "hacktivist";
  const ScenarioParams p = resolve(cfg);
  EXPECT_EQ(p.delta(), 2.0);
  EXPECT_EQ(p.p2(), 0.4);
  EXPECT_EQ(p.V(), 1000);
  EXPECT_EQ(p.alpha(), 0.3);
  EXPECT_EQ(p.c1(), 100);
  EXPECT_EQ(p.c2(), 200);
}

TEST(Resolve, ExplicitOverrideBeatsArchetype) {
  ScenarioConfig cfg{reference_base()};
  cfg.archetype = "hacktivist";
  cfg.overrides.delta = 0.3;
  EXPECT_EQ(resolve(cfg).delta(), 0.3);
  EXPECT_EQ(resolve(cfg).p2(), 0.4);
}

TEST(Resolve, Errors) {
  ScenarioConfig cfg{reference_base()};
  cfg.archetype = "apt99";
  EXPECT_THROW(resolve(cfg), std::invalid_argument);

  ScenarioConfig missing{};
  missing.base.V = 10;
  try {
    resolve(missing);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
  }
}

TEST(Resolve, Idempotent) {
  ScenarioConfig cfg{reference_base()};
  cfg.archetype = "criminal";
  cfg.overrides.c2 = 55;
  const ScenarioParams once = resolve(cfg);
  const ScenarioConfig rewrapped{PartialParams::from(once)};
  EXPECT_EQ(resolve(rewrapped), once);
}

TEST(LoadScenario, MinimalDocument) {
  const ScenarioConfig cfg = parse_scenario(
      R"({"V": 1000, "alpha": 0.5, "p2": 0.8, "delta": 0.8, "C1": 100, "C2": 200})");
  EXPECT_EQ(resolve(cfg), ScenarioParams(1000, 0.5, 0.8, 0.8, 100, 200));
  EXPECT_FALSE(cfg.archetype);
  EXPECT_FALSE(cfg.t);
  EXPECT_TRUE(cfg.distributions.empty());
}

TEST(LoadScenario, ArchetypeSuppliesMissingKeys) {
  const ScenarioConfig cfg =
      parse_scenario(R"({"V": 1000, "alpha": 0.5, "C1": 100, "C2": 200, "archetype": "criminal", "t": 2})");
  const ScenarioParams p = resolve(cfg);
  EXPECT_EQ(p.delta(), 0.8);
  EXPECT_EQ(p.p2(), 0.6);
  EXPECT_EQ(*cfg.t, 2.0);
}

TEST(LoadScenario, BoundsErrorNamesField) {
  EXPECT_THROW(parse_scenario(R"({"alpha": 1.5})"), std::invalid_argument);
  EXPECT_NE(error_of(R"({"alpha": 1.5})").find("alpha"), std::string::npos);
  EXPECT_THROW(parse_scenario(R"({"t": -1})"), std::invalid_argument);
}

TEST(LoadScenario, StrictSchema) {
  EXPECT_THROW(parse_scenario(R"({"V": 1, "gamma": 2})"), ScenarioFileError);
  EXPECT_NE(error_of(R"({"V": 1, "gamma": 2})").find("gamma"), std::string::npos);
  EXPECT_THROW(parse_scenario(R"({"V": "1000"})"), ScenarioFileError);
  EXPECT_THROW(parse_scenario(R"({"archetype": 3})"), ScenarioFileError);
  EXPECT_THROW(parse_scenario(R"([1, 2])"), ScenarioFileError);
  EXPECT_THROW(parse_scenario(R"({"V": 1,)"), ScenarioFileError);
  EXPECT_THROW(parse_scenario(R"({"distributions": {"p2": {"kind": "normal", "a": 0, "b": 1}}})"),
               ScenarioFileError);
  EXPECT_THROW(parse_scenario(R"({"distributions": {"p2": {"kind": "point", "v": 0.1, "w": 2}}})"),
               ScenarioFileError);
  EXPECT_THROW(parse_scenario(R"({"distributions": {"p2": {"kind": "uniform", "a": 0}}})"),
               ScenarioFileError);
  EXPECT_THROW(parse_scenario(R"({"distributions": {"zeta": {"kind": "point", "v": 0}}})"),
               ScenarioFileError);
}

TEST(LoadScenario, DistributionBounds) {
  EXPECT_THROW(parse_scenario(R"({"distributions": {"p2": {"kind": "uniform", "a": 0.5, "b": 1.5}}})"),
               std::invalid_argument);
  EXPECT_THROW(parse_scenario(R"({"distributions": {"p2": {"kind": "uniform", "a": 0.6, "b": 0.5}}})"),
               std::invalid_argument);
  EXPECT_THROW(parse_scenario(R"({"distributions": {"alpha": {"kind": "beta", "a": 0, "b": 1}}})"),
               std::invalid_argument);
  EXPECT_THROW(parse_scenario(R"({"distributions": {"V": {"kind": "beta", "a": 2, "b": 2}}})"),
               std::invalid_argument);
  EXPECT_THROW(parse_scenario(R"({"distributions": {"C1": {"kind": "point", "v": -1}}})"),
               std::invalid_argument);
  const ScenarioConfig ok = parse_scenario(
      R"({"distributions": {"p2": {"kind": "uniform", "a": 0.0, "b": 1.0}, "delta": {"kind": "beta", "a": 2.0, "b": 5.0}}})");
  ASSERT_EQ(ok.distributions.size(), 2u);
  EXPECT_EQ(ok.distributions[1].target, ParamTarget::Delta);
  EXPECT_EQ(std::get<BetaShape>(ok.distributions[1].kind), (BetaShape{2.0, 5.0}));
}

TEST(LoadScenario, MissingFile) {
  EXPECT_THROW(load_scenario("/nonexistent/scenario.json"), ScenarioFileError);
}

TEST(LoadScenario, ReadsFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "attackecon_load_test.json";
  {
    std::ofstream f(path);
    f << R"({"V": 1000, "alpha": 0.5, "p2": 0.8, "delta": 0.8, "C1": 100, "C2": 200, "t": 1})";
  }
  const ScenarioConfig cfg = load_scenario(path);
  std::filesystem::remove(path);
  EXPECT_EQ(resolve(cfg).alpha(), 0.5);
}

TEST(SerializeScenario, RoundTripPreservesResolution) {
  ScenarioConfig cfg{reference_base(0.1 + 0.2)};  // 0.30000000000000004 must survive
  cfg.archetype = "hacktivist";
  cfg.overrides.delta = 0.3;
  cfg.t = 2.5;
  cfg.distributions.push_back({ParamTarget::P2, UniformRange{0.1, 0.7}});
  cfg.distributions.push_back({ParamTarget::Delta, BetaShape{2, 5}});
  cfg.distributions.push_back({ParamTarget::C2, PointMass{1.0 / 3.0}});

  const ScenarioConfig back = parse_scenario(serialize_scenario(cfg));
  EXPECT_EQ(back, cfg);
  EXPECT_EQ(resolve(back), resolve(cfg));
  EXPECT_EQ(serialize_scenario(back), serialize_scenario(cfg));
}
