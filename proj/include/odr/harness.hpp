#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "odr/algorithms.hpp"
#include "odr/dr_model.hpp"
#include "odr/offline_bench.hpp"
#include "odr/predictors.hpp"

namespace odr {

// ---------------------------------------------------------------- price data

/// Reads `interval,price_usd_per_mwh` with 0-based contiguous intervals.
/// Error messages count data rows from 1 (the header is line 0).
/// expected_length < 0 accepts any non-empty series.
PriceSeries load_prices_csv(const std::filesystem::path& path, int expected_length = -1);

/// Shortest round-trip representation, so reading back is bit-exact.
void write_prices_csv(const std::filesystem::path& path, const PriceSeries& prices);

struct SyntheticPriceSpec {
  double mean = 72.0;
  double reversion = 0.08;
  double vol = 2.5;
  double spike_prob = 0.01;
  double spike_scale = 25.0;
  std::optional<double> start;  // defaults to mean

  void validate() const;
};

/// Mean-reverting walk with positive exponential spikes, floored at zero.
PriceSeries gen_synthetic_prices(std::uint64_t seed, int horizon, const SyntheticPriceSpec& spec);

// ------------------------------------------------------------ configuration

enum class Algorithm { NoPrediction, Rhgd, Rhag, RollingRobust };

enum class PredictorKind { None, Perfect, Noisy, Ar };

struct MethodSpec {
  std::string name;
  Algorithm algorithm = Algorithm::NoPrediction;
  PredictorKind predictor = PredictorKind::None;
  int window = 0;  // receding-horizon look-ahead; ignored otherwise
};

struct PredictorSpec {
  PredictorKind kind = PredictorKind::Perfect;
  double sigma_rel = 0.05;
  std::uint64_t seed = 7;
  int ar_order = 12;
  int ar_window = 288;
};

struct PriceSource {
  std::optional<std::filesystem::path> file;
  std::optional<std::filesystem::path> prior_file;  // history before the first stage (AR)
  std::uint64_t first_seed = 1000;
  SyntheticPriceSpec synthetic;
};

struct ExperimentConfig {
  ConsumerConfig consumer;
  HyperParams hyper;
  std::vector<MethodSpec> methods;
  PredictorSpec predictor;
  std::optional<RobustSpec> robust;
  int robust_levels = 41;
  int grid_levels = 241;
  PriceSource prices;
  std::filesystem::path output_dir = "out";
  int days = 1;
  std::optional<double> x0;
  bool hard_finish = false;
  bool report_wall_time = false;
  bool write_traces = true;
  int threads = 1;
  int timing_repeats = 5;

  /// Throws ParameterError on any inconsistency; runs nothing.
  void validate() const;
  double start_point() const;
};

/// Parses the JSON configuration; relative paths resolve against base_dir.
ExperimentConfig parse_config(const nlohmann::json& doc,
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

std::string to_string(Algorithm a);
std::string to_string(PredictorKind k);

// ------------------------------------------------------------------ running

/// Prices of day `day` (0-based) and the history preceding it.
struct DayData {
  PriceSeries prices;
  std::vector<double> prior;
};

DayData day_data(const ExperimentConfig& cfg, int day);

std::unique_ptr<Predictor> make_predictor(const ExperimentConfig& cfg, PredictorKind kind,
                                          const DayData& data, int day);

/// Runs one method on one day.
RunTrace run_method(const ExperimentConfig& cfg, const MethodSpec& method, const DayData& data,
                    int day);

/// mean_ratio_pct is 100 * total profit / total hindsight profit over all days.
struct SummaryRow {
  std::string method;
  double mean_profit = 0.0;
  double mean_ratio_pct = 0.0;
  double mean_shortfall_mwh = 0.0;
  double mean_wall_time_s = 0.0;
};

struct DayResult {
  double offline_profit = 0.0;
  double offline_allowance = 0.0;  // repair_gap + grid_bound of the oracle
  std::vector<RunTrace> traces;    // one per configured method, config order
};

struct SuiteResult {
  std::vector<SummaryRow> summary;  // sorted by method name, includes "offline"
  std::vector<DayResult> days;
};

/// Runs every method on every day, writes trace and summary CSVs into the output
/// directory and returns the in-memory results.
SuiteResult run_suite(const ExperimentConfig& cfg);

struct WindowSweepRow {
  int window = 0;
  double profit = 0.0;
  double wall_time_s = 0.0;
};

/// Profit and run time of one receding-horizon method over the given windows on day 0.
std::vector<WindowSweepRow> emit_window_sweep(const ExperimentConfig& cfg, const MethodSpec& method,
                                              const std::vector<int>& windows,
                                              const std::filesystem::path& out_csv);

struct GammaSweepRow {
  double gamma_frac = 0.0;
  double profit = 0.0;
  double wall_time_s = 0.0;
};

std::vector<GammaSweepRow> emit_gamma_sweep(const ExperimentConfig& cfg,
                                            const std::vector<double>& gammas,
                                            const std::filesystem::path& out_csv);

void write_trace_csv(const std::filesystem::path& path, const RunTrace& trace,
                     const PriceSeries& prices);
void write_summary_csv(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);

}  // namespace odr
