#include "attackecon/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "attackecon/archetypes.hpp"
#include "attackecon/montecarlo.hpp"

namespace attackecon::cli {

namespace {

// Parameter flags shared by every model subcommand.
struct ScenarioFlags {
  double values[std::size(kAllTargets)] = {};
  CLI::Option* given[std::size(kAllTargets)] = {};
  double t = 0.0;
  CLI::Option* t_given = nullptr;
  std::string config_path;
  std::string archetype;

  void attach(CLI::App& app) {
    static constexpr const char* names[] = {"--alpha", "--p2", "--delta", "--V", "--c1", "--c2"};
    for (ParamTarget target : kAllTargets) {
      const auto k = static_cast<std::size_t>(target);
      given[k] = app.add_option(names[k], values[k], std::string(key_of(target)) + " value");
    }
    t_given = app.add_option("--t", t, "evaluation time");
    app.add_option("--config", config_path, "scenario JSON file");
    app.add_option("--archetype", archetype, "attacker preset name");
  }

  ScenarioConfig config() const {
    ScenarioConfig cfg;
    if (!config_path.empty()) cfg = load_scenario(config_path);
    if (!archetype.empty()) cfg.archetype = archetype;
    for (ParamTarget target : kAllTargets) {
      const auto k = static_cast<std::size_t>(target);
      if (given[k]->count() > 0) cfg.overrides[target] = values[k];
    }
    if (t_given->count() > 0) cfg.t = t;
    return cfg;
  }
};

double required_time(const ScenarioConfig& cfg) {
  if (!cfg.t) throw std::invalid_argument("missing evaluation time (--t or \"t\" in config)");
  require_valid_time(*cfg.t);
  return *cfg.t;
}

std::string break_even_field(const BreakEven& be) {
  switch (be.kind) {
    case BreakEven::Kind::Finite: return fixed6(be.t);
    case BreakEven::Kind::Never: return "NONE";
    case BreakEven::Kind::Always: return "ALWAYS";
  }
  return "?";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ScenarioFileError("cannot open " + path + " for writing");
  file << content;
  if (!file.flush()) throw ScenarioFileError("failed writing " + path);
}

void cmd_eval(const ScenarioFlags& flags, std::ostream& out) {
  const ScenarioConfig cfg = flags.config();
  const ScenarioParams params = resolve(cfg);
  const double t = required_time(cfg);
  out << kGridHeader << '\n'
      << fixed6(params.alpha()) << ',' << fixed6(t) << ','
      << fixed6(phase_one_payoff(params).value()) << ','
      << fixed6(phase_two_payoff(params, t).value()) << ','
      << to_string(optimal_action(params, t)) << '\n';
}

struct SweepFlags {
  double alpha_min = 0.0, alpha_max = 1.0, t_min = 0.0, t_max = 5.0;
  std::size_t alpha_steps = 11, t_steps = 11;
  unsigned threads = 1;
  std::string out_path, svg_path;

  void attach(CLI::App& app) {
    app.add_option("--alpha-min", alpha_min);
    app.add_option("--alpha-max", alpha_max);
    app.add_option("--alpha-steps", alpha_steps);
    app.add_option("--t-min", t_min);
    app.add_option("--t-max", t_max);
    app.add_option("--t-steps", t_steps);
    app.add_option("--threads", threads, "worker threads (output does not depend on it)");
    app.add_option("--out", out_path, "CSV output path (stdout when omitted)");
    app.add_option("--svg", svg_path, "optional SVG chart path");
  }
};

void cmd_sweep(const ScenarioFlags& flags, const SweepFlags& sweep, std::ostream& out) {
  ScenarioConfig cfg = flags.config();
  // The sweep supplies alpha itself.
  if (!cfg.base.alpha && !cfg.overrides.alpha) cfg.base.alpha = 0.0;
  SweepSpec spec{resolve(cfg),   sweep.alpha_min, sweep.alpha_max, sweep.alpha_steps,
                 sweep.t_min,    sweep.t_max,     sweep.t_steps};
  const SweepGrid grid = run_sweep(spec, sweep.threads);

  if (sweep.out_path.empty()) {
    write_grid_csv(grid, out);
  } else {
    std::ostringstream csv;
    write_grid_csv(grid, csv);
    write_file(sweep.out_path, csv.str());
  }
  if (!sweep.svg_path.empty()) write_file(sweep.svg_path, render_payoff_chart(grid));
}

void cmd_breakeven(const ScenarioFlags& flags, std::ostream& out) {
  const ScenarioParams params = resolve(flags.config());
  out << "alpha,t_star_vs_phase_one,t_star_vs_zero\n"
      << fixed6(params.alpha()) << ',' << break_even_field(break_even_vs_phase_one(params)) << ','
      << break_even_field(break_even_vs_zero(params)) << '\n';
}

void cmd_mc(const ScenarioFlags& flags, std::uint64_t samples, std::uint64_t seed,
            std::ostream& out) {
  const ScenarioConfig cfg = flags.config();
  const MCResult r = run_mc(cfg, required_time(cfg), samples, seed);
  out << "n,seed,mean_pi1,mean_pi2,ci95_pi2,p_no_attack,p_phase_one,p_two_phase\n"
      << r.n << ',' << r.seed << ',' << fixed6(r.mean_pi1) << ',' << fixed6(r.mean_pi2) << ','
      << fixed6(r.ci95_pi2) << ',' << fixed6(r.p_no_attack) << ',' << fixed6(r.p_phase_one)
      << ',' << fixed6(r.p_two_phase) << '\n';
}

void cmd_archetypes(std::ostream& out) {
  std::vector<const Archetype*> sorted;
  for (const Archetype& a : builtin_archetypes()) sorted.push_back(&a);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Archetype* l, const Archetype* r) {
                     return *l->overrides.delta < *r->overrides.delta;
                   });
  for (const Archetype* a : sorted)
    out << a->name << ',' << fixed6(*a->overrides.delta) << ',' << fixed6(*a->overrides.p2) << ','
        << a->description << '\n';
}

}  // namespace

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

void write_grid_csv(const SweepGrid& grid, std::ostream& out) {
  out << kGridHeader << '\n';
  for (const RegionCell& c : grid.cells)
    out << fixed6(c.alpha) << ',' << fixed6(c.t) << ',' << fixed6(c.pi1) << ',' << fixed6(c.pi2)
        << ',' << to_string(c.action) << '\n';
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-phase attacker payoff model"};
  app.name("attackecon");
  app.require_subcommand(1);

  ScenarioFlags eval_flags, sweep_flags, be_flags, mc_flags;
  SweepFlags sweep_opts;
  std::uint64_t samples = 0, seed = 0;

  CLI::App* eval = app.add_subcommand("eval", "evaluate both payoffs and the optimal action");
  eval_flags.attach(*eval);
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate an (alpha, t) grid");
  sweep_flags.attach(*sweep);
  sweep_opts.attach(*sweep);
  CLI::App* breakeven = app.add_subcommand("breakeven", "closed-form break-even times");
  be_flags.attach(*breakeven);
  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo over parameter distributions");
  mc_flags.attach(*mc);
  mc->add_option("--samples", samples, "number of draws")->required();
  mc->add_option("--seed", seed, "RNG seed")->required();
  CLI::App* archetypes = app.add_subcommand("archetypes", "list attacker presets");

  std::vector<const char*> argv{"attackecon"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidParams;
  }

  try {
    if (eval->parsed()) cmd_eval(eval_flags, out);
    else if (sweep->parsed()) cmd_sweep(sweep_flags, sweep_opts, out);
    else if (breakeven->parsed()) cmd_breakeven(be_flags, out);
    else if (mc->parsed()) cmd_mc(mc_flags, samples, seed, out);
    else if (archetypes->parsed()) cmd_archetypes(out);
  } catch (const ScenarioFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFileError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidParams;
  }
  return kExitOk;
}

}  // namespace attackecon::cli
