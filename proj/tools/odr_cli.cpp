// Command-line front end: single runs, multi-day suites, window and budget sweeps,
// and synthetic price generation.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "odr/errors.hpp"
#include "odr/harness.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
};

odr::ExperimentConfig load(const CommonArgs& args) {
  odr::ExperimentConfig cfg = odr::load_config(args.config);
  if (!args.out.empty()) cfg.output_dir = args.out;
  if (args.seed) cfg.prices.first_seed = *args.seed;
  return cfg;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config, "experiment configuration (JSON)")->required();
  cmd->add_option("--out", args.out, "output directory (overrides output_dir)");
  cmd->add_option("--seed", args.seed, "first synthetic price seed (overrides prices.first_seed)");
}

void print_summary(const std::vector<odr::SummaryRow>& rows) {
  for (const auto& r : rows) {
    std::cout << r.method << ": profit " << r.mean_profit << " $, ratio " << r.mean_ratio_pct
              << " %, shortfall " << r.mean_shortfall_mwh << " MWh\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online demand response: online primal-dual and receding-horizon methods "
               "against hindsight and rolling robust baselines"};
  app.require_subcommand(1);

  CommonArgs run_args, suite_args, sweep_w_args, sweep_g_args;
  auto* run = app.add_subcommand("run", "single experiment (first day only)");
  add_common(run, run_args);

  auto* suite = app.add_subcommand("suite", "multi-day study");
  add_common(suite, suite_args);

  auto* sweep_w = app.add_subcommand("sweep-w", "profit and time against look-ahead window");
  add_common(sweep_w, sweep_w_args);
  std::vector<int> windows{1, 3, 6, 12};
  std::string sweep_method = "rhgd";
  std::string sweep_predictor = "perfect";
  sweep_w->add_option("--windows", windows, "window lengths")->delimiter(',');
  sweep_w->add_option("--method", sweep_method, "rhgd or rhag");
  sweep_w->add_option("--predictor", sweep_predictor, "perfect, noisy or ar");

  auto* sweep_g = app.add_subcommand("sweep-gamma", "rolling robust profit against budget");
  add_common(sweep_g, sweep_g_args);
  std::vector<double> gammas{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  sweep_g->add_option("--gammas", gammas, "budget fractions")->delimiter(',');

  auto* gen = app.add_subcommand("gen-prices", "write a synthetic price CSV");
  std::uint64_t gen_seed = 1000;
  int gen_horizon = 288;
  std::string gen_out = "prices.csv";
  std::string gen_config;
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--horizon", gen_horizon, "number of intervals");
  gen->add_option("--out", gen_out, "output CSV path");
  gen->add_option("--config", gen_config, "take generator parameters from this configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      odr::ExperimentConfig cfg = load(run_args);
      cfg.days = 1;
      const auto result = odr::run_suite(cfg);
      print_summary(result.summary);
    } else if (*suite) {
      const auto result = odr::run_suite(load(suite_args));
      print_summary(result.summary);
    } else if (*sweep_w) {
      const odr::ExperimentConfig cfg = load(sweep_w_args);
      odr::MethodSpec m;
      m.name = sweep_method;
      if (sweep_method == "rhgd") {
        m.algorithm = odr::Algorithm::Rhgd;
      } else if (sweep_method == "rhag") {
        m.algorithm = odr::Algorithm::Rhag;
      } else {
        throw odr::ParameterError("sweep-w: --method must be rhgd or rhag");
      }
      if (sweep_predictor == "perfect") {
        m.predictor = odr::PredictorKind::Perfect;
      } else if (sweep_predictor == "noisy") {
        m.predictor = odr::PredictorKind::Noisy;
      } else if (sweep_predictor == "ar") {
        m.predictor = odr::PredictorKind::Ar;
      } else {
        throw odr::ParameterError("sweep-w: unknown predictor " + sweep_predictor);
      }
      const auto rows = odr::emit_window_sweep(cfg, m, windows, cfg.output_dir / "window_sweep.csv");
      for (const auto& r : rows) std::cout << "W=" << r.window << " profit " << r.profit << '\n';
    } else if (*sweep_g) {
      const odr::ExperimentConfig cfg = load(sweep_g_args);
      const auto rows = odr::emit_gamma_sweep(cfg, gammas, cfg.output_dir / "gamma_sweep.csv");
      for (const auto& r : rows) std::cout << "gamma " << r.gamma_frac << " profit " << r.profit << '\n';
    } else if (*gen) {
      odr::SyntheticPriceSpec spec;
      if (!gen_config.empty()) spec = odr::load_config(gen_config).prices.synthetic;
      odr::write_prices_csv(gen_out, odr::gen_synthetic_prices(gen_seed, gen_horizon, spec));
    }
  } catch (const odr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
