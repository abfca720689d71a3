#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "czdc/harness.hpp"
#include "czdc/models.hpp"
#include "czdc/selftest.hpp"

namespace {

int run_benchmark(const std::string& example, int steps, int runs, int phi_c,
                  int phi_g, const std::string& enclosure, std::uint64_t seed,
                  bool no_consistency, const std::string& out,
                  const std::string& sets) {
  const czdc::SystemModel model = czdc::build_model(example);
  const czdc::ModelDefaults def = czdc::defaults_for(example);

  czdc::RunConfig cfg;
  cfg.steps = steps > 0 ? steps : def.steps;
  cfg.runs = runs > 0 ? runs : def.runs;
  cfg.targets.phi_c = phi_c >= 0 ? phi_c : def.phi_c;
  cfg.targets.phi_g = phi_g > 0 ? phi_g : def.phi_g;
  cfg.enclosure = enclosure.empty()
                      ? def.enclosure
                      : (enclosure == "box" ? czdc::EnclosureKind::kBox
                                            : czdc::EnclosureKind::kParallelotope);
  cfg.seed = seed;
  cfg.consistency = !no_consistency;
  cfg.csv_path = out;
  cfg.sets_path = sets;

  const czdc::RunMetrics met = czdc::run_monte_carlo(model, cfg);

  std::cout << "model=" << example << " runs=" << met.runs
            << " steps=" << met.steps << " phi_c=" << cfg.targets.phi_c
            << " phi_g=" << cfg.targets.phi_g
            << " enclosure=" << czdc::to_string(cfg.enclosure)
            << " seed=" << cfg.seed << '\n';
  std::cout << "mean_area=" << met.mean_area
            << " mean_step_ms=" << met.mean_step_ms
            << " containment_violations=" << met.containment_violations
            << " emptiness_events=" << met.emptiness_events << '\n';
  return (met.containment_violations == 0 && met.emptiness_events == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-membership state estimation benchmarks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Monte Carlo filter benchmark");
  std::string example;
  int steps = -1, runs = -1, phi_c = -1, phi_g = -1;
  std::string enclosure;
  std::uint64_t seed = 1;
  bool no_consistency = false;
  std::string out, sets;

  run->add_option("--example", example, "benchmark system")
      ->required()
      ->check(CLI::IsMember(czdc::model_names()));
  run->add_option("--steps", steps, "steps per run (default: model preset)");
  run->add_option("--runs", runs, "Monte Carlo runs (default: model preset)");
  run->add_option("--phi-c", phi_c, "constraint budget after reduction");
  run->add_option("--phi-g", phi_g, "generator budget after reduction");
  run->add_option("--enclosure", enclosure,
                  "polytope enclosure kind (default: model preset)")
      ->check(CLI::IsMember({"box", "partope"}));
  run->add_option("--seed", seed, "master seed");
  run->add_option("--out", out, "per-step CSV path");
  run->add_option("--sets", sets, "text dump of every estimate set");
  run->add_flag("--no-consistency", no_consistency,
                "skip the invariant consistency stage");

  auto* selftest =
      app.add_subcommand("selftest", "randomized property checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest->parsed()) {
      const czdc::SelftestResult res = czdc::run_selftest(std::cout);
      std::cout << res.passed << " passed, " << res.failed << " failed\n";
      return res.ok() ? 0 : 1;
    }
    return run_benchmark(example, steps, runs, phi_c, phi_g, enclosure, seed,
                         no_consistency, out, sets);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
