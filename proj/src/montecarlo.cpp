#include "attackecon/montecarlo.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace attackecon {

MCResult run_mc(const ScenarioConfig& config, double t, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample count must be >= 1");
  require_valid_time(t);

  const PartialParams resolved = PartialParams::from(resolve(config));

  // One slot per target, drawn in kAllTargets order on every sample.
  std::array<const ParamDistribution*, std::size(kAllTargets)> by_target{};
  for (const ParamDistribution& d : config.distributions) {
    d.validate();
    auto& slot = by_target[static_cast<std::size_t>(d.target)];
    if (slot) throw std::invalid_argument("duplicate distribution for " + std::string(key_of(d.target)));
    slot = &d;
  }

  std::mt19937_64 rng(seed);
  std::array<std::uint64_t, 3> action_counts{};
  double mean1 = 0.0;
  double mean2 = 0.0;
  double m2 = 0.0;  // running sum of squared deviations of pi2

  for (std::uint64_t k = 1; k <= n; ++k) {
    PartialParams draw = resolved;
    for (ParamTarget target : kAllTargets)
      if (const ParamDistribution* d = by_target[static_cast<std::size_t>(target)])
        draw[target] = d->sample(rng);
    const ScenarioParams params = draw.complete();

    const double pi1 = phase_one_payoff(params).value();
    const double pi2 = phase_two_payoff(params, t).value();
    ++action_counts[static_cast<std::size_t>(optimal_action(params, t))];

    // Welford updates; a constant stream leaves the mean bit-exact.
    const double kd = static_cast<double>(k);
    mean1 += (pi1 - mean1) / kd;
    const double d2 = pi2 - mean2;
    mean2 += d2 / kd;
    m2 += d2 * (pi2 - mean2);
  }

  const double nd = static_cast<double>(n);
  MCResult result;
  result.n = n;
  result.seed = seed;
  result.mean_pi1 = mean1;
  result.mean_pi2 = mean2;
  result.ci95_pi2 = n > 1 ? 1.96 * std::sqrt(m2 / (nd - 1.0)) / std::sqrt(nd) : 0.0;
  result.p_no_attack = static_cast<double>(action_counts[0]) / nd;
  result.p_phase_one = static_cast<double>(action_counts[1]) / nd;
  result.p_two_phase = static_cast<double>(action_counts[2]) / nd;
  return result;
}

}  // namespace attackecon
