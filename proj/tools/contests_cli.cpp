#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <contests/contests.hpp>

namespace {

using contests::Json;

int emit(const Json& j, const std::string& format, const std::string& output,
         std::string (*render)(const Json&)) {
  const std::string text = format == "json" ? j.dump(2) + "\n" : render(j);
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write output file: " << output << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash equilibria of two-player effort contests over constrained choice sets"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "text";
  std::string output_path;
  double grid_step = 0.0;
  double eps = 0.0;
  bool self_test_corrupt = false;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_steps = 0;
  double id_v = 1.0;
  double id_r = 1.0;
  int id_samples = 10000;
  std::uint64_t id_seed = 42;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", output_path, "Write the result to a file instead of stdout");
  };

  CLI::App* solve = app.add_subcommand(
      "solve", "Classify a symmetric contest and list its equilibria");
  solve->add_option("--config", config_path, "Contest description (JSON)")->required();
  add_common(solve);

  CLI::App* matrix = app.add_subcommand(
      "matrix", "Build the finite payoff matrix and analyze it");
  matrix->add_option("--config", config_path, "Contest description (JSON)")->required();
  matrix->add_option("--grid-step", grid_step,
                     "Spacing used to discretize interval segments");
  add_common(matrix);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep the indifference threshold over upper bracket efforts");
  sweep->add_option("--config", config_path, "Contest description (JSON)")->required();
  sweep->add_option("--from", sweep_from, "First upper effort")->required();
  sweep->add_option("--to", sweep_to, "Last upper effort")->required();
  sweep->add_option("--steps", sweep_steps, "Number of rows")->required();
  add_common(sweep);

  CLI::App* identity = app.add_subcommand(
      "identity-check", "Monte-Carlo check of the payoff-difference identity");
  identity->add_option("--v", id_v, "Prize value")->capture_default_str();
  identity->add_option("--r", id_r, "Impact exponent")->capture_default_str();
  identity->add_option("--samples", id_samples, "Number of sampled effort pairs")
      ->capture_default_str();
  identity->add_option("--seed", id_seed, "RNG seed")->capture_default_str();
  add_common(identity);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Cross-check predicted equilibria against a brute-force grid search");
  oracle->add_option("--config", config_path, "Contest description (JSON)")->required();
  oracle->add_option("--grid-step", grid_step, "Grid spacing (overrides the config)");
  oracle->add_option("--eps", eps, "Deviation-gain slack (overrides the config)");
  oracle->add_flag("--self-test-corrupt", self_test_corrupt,
                   "Replace the predictions with a deliberately wrong profile; the check "
                   "must refute it");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(solve)) {
      const contests::ParsedConfig cfg = contests::load_config_file(config_path);
      if (!cfg.spec.choice_set.has_value()) {
        std::cerr << "error: solve needs a shared choice set; use the matrix command for "
                     "per-player effort lists\n";
        return 2;
      }
      const contests::EquilibriumReport rep =
          contests::classify(cfg.spec, cfg.run.tolerances);
      return emit(contests::report_to_json(rep), format, output_path,
                  contests::render_report);
    }

    if (app.got_subcommand(matrix)) {
      const contests::ParsedConfig cfg = contests::load_config_file(config_path);
      std::vector<double> efforts_1;
      std::vector<double> efforts_2;
      if (cfg.spec.choice_set.has_value()) {
        bool has_interval = false;
        for (const contests::Segment& seg : cfg.spec.choice_set->segments()) {
          if (!seg.is_point()) has_interval = true;
        }
        if (has_interval) {
          if (matrix->count("--grid-step") == 0) {
            std::cerr << "error: the choice set has interval segments; pass --grid-step to "
                         "discretize them\n";
            return 2;
          }
          efforts_1 = contests::discretize(*cfg.spec.choice_set, grid_step).points;
        } else {
          efforts_1 = cfg.spec.choice_set->as_points();
        }
        efforts_2 = efforts_1;
      } else {
        auto lists = cfg.spec.strategy_lists();
        efforts_1 = std::move(lists.first);
        efforts_2 = std::move(lists.second);
      }
      const contests::Bimatrix bm = contests::build_bimatrix(
          cfg.spec.v1, cfg.spec.v2, cfg.spec.impact, efforts_1, efforts_2);
      const contests::NashResult res = contests::analyze(bm, cfg.run.tolerances.tie);
      return emit(contests::nash_result_to_json(bm, res), format, output_path,
                  contests::render_matrix);
    }

    if (app.got_subcommand(sweep)) {
      const contests::ParsedConfig cfg = contests::load_config_file(config_path);
      if (!cfg.spec.is_symmetric()) {
        std::cerr << "error: the sweep needs a symmetric contest with a shared choice set\n";
        return 2;
      }
      const double e_star =
          contests::unconstrained_equilibrium(cfg.spec.v1, cfg.spec.impact);
      const contests::Bracket bracket =
          contests::bracket_around(*cfg.spec.choice_set, e_star);
      const std::vector<contests::ThresholdSweepRow> rows = contests::sweep_threshold(
          cfg.spec.v1, cfg.spec.impact, bracket.lower, sweep_from, sweep_to, sweep_steps,
          cfg.run.tolerances);
      return emit(contests::sweep_to_json(rows), format, output_path,
                  contests::render_sweep);
    }

    if (app.got_subcommand(identity)) {
      const contests::IdentityCheckResult res = contests::identity_check(
          contests::Valuation(id_v), contests::ImpactFunction::scaled_power(id_r),
          id_samples, id_seed);
      const int code = emit(contests::identity_to_json(res), format, output_path,
                            contests::render_identity);
      if (code != 0) return code;
      return res.pass ? 0 : 1;
    }

    if (app.got_subcommand(oracle)) {
      const contests::ParsedConfig cfg = contests::load_config_file(config_path);
      const double h = oracle->count("--grid-step") > 0 ? grid_step : cfg.run.grid_step;
      const double slack = oracle->count("--eps") > 0 ? eps : cfg.run.eps;
      contests::OracleVerdict verdict;
      if (cfg.spec.choice_set.has_value()) {
        contests::EquilibriumReport rep =
            contests::classify(cfg.spec, cfg.run.tolerances);
        if (self_test_corrupt) {
          const double off = rep.e_star + 0.1234 * std::max(1.0, cfg.spec.v1.v);
          rep.equilibria = {{off, off}};
        }
        verdict = contests::verify_report(rep, cfg.spec, h, slack);
      } else {
        auto lists = cfg.spec.strategy_lists();
        const contests::Bimatrix bm = contests::build_bimatrix(
            cfg.spec.v1, cfg.spec.v2, cfg.spec.impact, lists.first, lists.second);
        const contests::NashResult res = contests::analyze(bm, cfg.run.tolerances.tie);
        std::vector<contests::EffortPair> predicted;
        for (const contests::Cell& c : res.pure_equilibria) {
          predicted.push_back({bm.efforts_1[c.row], bm.efforts_2[c.col]});
        }
        if (self_test_corrupt) {
          const double e_star =
              contests::unconstrained_equilibrium(cfg.spec.v1, cfg.spec.impact);
          const double off = e_star + 0.1234 * std::max(1.0, cfg.spec.v1.v);
          predicted = {{off, off}};
        }
        verdict = contests::verify_pure_cells(predicted, cfg.spec.v1, cfg.spec.v2,
                                              cfg.spec.impact, lists.first, lists.second);
      }
      const int code = emit(contests::verdict_to_json(verdict), format, output_path,
                            contests::render_verdict);
      if (code != 0) return code;
      return verdict.confirmed ? 0 : 1;
    }
  } catch (const contests::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
