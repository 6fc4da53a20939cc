#include "attackecon/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace attackecon {

namespace {

bool unit_bounded(ParamTarget target) {
  return target == ParamTarget::Alpha || target == ParamTarget::P2;
}

bool in_range(ParamTarget target, double x) {
  if (!std::isfinite(x) || x < 0.0) return false;
  return !unit_bounded(target) || x <= 1.0;
}

[[noreturn]] void reject(ParamTarget target, const std::string& what) {
  throw std::invalid_argument("distribution for " + std::string(key_of(target)) + ": " + what);
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string_view key_of(ParamTarget target) noexcept {
  switch (target) {
    case ParamTarget::Alpha: return "alpha";
    case ParamTarget::P2: return "p2";
    case ParamTarget::Delta: return "delta";
    case ParamTarget::V: return "V";
    case ParamTarget::C1: return "C1";
    case ParamTarget::C2: return "C2";
  }
  return "?";
}

ParamTarget target_from_key(std::string_view key) {
  for (ParamTarget t : kAllTargets)
    if (key_of(t) == key) return t;
  throw std::invalid_argument("unknown parameter \"" + std::string(key) + "\"");
}

void ParamDistribution::validate() const {
  std::visit(overloaded{
                 [&](const PointMass& d) {
                   if (!in_range(target, d.v)) reject(target, "point value out of bounds");
                 },
                 [&](const UniformRange& d) {
                   if (!in_range(target, d.a) || !in_range(target, d.b))
                     reject(target, "uniform endpoints out of bounds");
                   if (d.a > d.b) reject(target, "uniform requires a <= b");
                 },
                 [&](const BetaShape& d) {
                   if (target != ParamTarget::Alpha && target != ParamTarget::P2 &&
                       target != ParamTarget::Delta)
                     reject(target, "beta is only allowed for alpha, p2 and delta");
                   if (!(std::isfinite(d.a) && std::isfinite(d.b)) || d.a <= 0.0 || d.b <= 0.0)
                     reject(target, "beta requires a > 0 and b > 0");
                 },
             },
             kind);
}

double ParamDistribution::sample(std::mt19937_64& rng) const {
  return std::visit(overloaded{
                        [](const PointMass& d) { return d.v; },
                        [&](const UniformRange& d) {
                          if (d.a == d.b) return d.a;
                          // Map the [0, 1) draw affinely so the result cannot leave [a, b].
                          const double u = std::generate_canonical<double, 53>(rng);
                          const double x = d.a + u * (d.b - d.a);
                          return x > d.b ? d.b : x;
                        },
                        [&](const BetaShape& d) {
                          std::gamma_distribution<double> gx(d.a, 1.0), gy(d.b, 1.0);
                          const double x = gx(rng);
                          const double y = gy(rng);
                          const double s = x + y;
                          return s > 0.0 ? x / s : 0.5;
                        },
                    },
                    kind);
}

}  // namespace attackecon
