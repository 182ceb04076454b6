#include "odr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "odr/errors.hpp"

namespace odr {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed10(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
  return s.substr(b);
}

template <typename T>
bool parse_number(const std::string& text, T& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

Algorithm algorithm_from(const std::string& s) {
  if (s == "no_prediction") return Algorithm::NoPrediction;
  if (s == "rhgd") return Algorithm::Rhgd;
  if (s == "rhag") return Algorithm::Rhag;
  if (s == "rolling_robust") return Algorithm::RollingRobust;
  throw ParameterError("unknown algorithm '" + s + "'");
}

PredictorKind predictor_from(const std::string& s) {
  if (s == "none") return PredictorKind::None;
  if (s == "perfect") return PredictorKind::Perfect;
  if (s == "noisy") return PredictorKind::Noisy;
  if (s == "ar") return PredictorKind::Ar;
  throw ParameterError("unknown predictor '" + s + "'");
}

template <typename T>
void read_opt(const json& obj, const char* key, T& field) {
  if (obj.contains(key) && !obj.at(key).is_null()) field = obj.at(key).get<T>();
}

fs::path resolve(const fs::path& base, const fs::path& p) {
  return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

// ---------------------------------------------------------------- price data

PriceSeries load_prices_csv(const fs::path& path, int expected_length) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open price file " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InputError(path.string() + ": empty file, no intervals");
  if (trim(line) != "interval,price_usd_per_mwh") {
    throw InputError(path.string() + ": expected header 'interval,price_usd_per_mwh'");
  }
  std::vector<double> values;
  long row = 0;
  while (std::getline(in, line)) {
    ++row;
    const std::string body = trim(line);
    if (body.empty()) continue;
    auto fail = [&](const std::string& why) {
      std::ostringstream os;
      os << path.string() << ": line " << row << ": " << why << " ('" << body << "')";
      throw InputError(os.str());
    };
    const auto comma = body.find(',');
    if (comma == std::string::npos) fail("expected two fields");
    long interval = 0;
    double price = 0.0;
    if (!parse_number(trim(body.substr(0, comma)), interval)) fail("bad interval index");
    if (!parse_number(trim(body.substr(comma + 1)), price)) fail("bad price");
    if (!std::isfinite(price)) fail("non-finite price");
    if (interval != static_cast<long>(values.size())) fail("intervals must be contiguous from 0");
    values.push_back(price);
  }
  if (values.empty()) throw InputError(path.string() + ": no intervals");
  if (expected_length >= 0 && static_cast<int>(values.size()) != expected_length) {
    std::ostringstream os;
    os << path.string() << ": " << values.size() << " intervals, expected " << expected_length;
    throw InputError(os.str());
  }
  return PriceSeries(std::move(values));
}

void write_prices_csv(const fs::path& path, const PriceSeries& prices) {
  std::ofstream out = open_out(path);
  out << "interval,price_usd_per_mwh\n";
  for (std::size_t i = 0; i < prices.size(); ++i) out << i << ',' << format_double(prices[i]) << '\n';
}

void SyntheticPriceSpec::validate() const {
  if (!(reversion > 0.0 && reversion <= 1.0)) throw ParameterError("reversion must lie in (0, 1]");
  if (vol < 0.0) throw ParameterError("vol must be non-negative");
  if (spike_prob < 0.0 || spike_prob > 1.0) throw ParameterError("spike_prob must lie in [0, 1]");
  if (spike_scale < 0.0) throw ParameterError("spike_scale must be non-negative");
  if (!std::isfinite(mean)) throw ParameterError("mean must be finite");
}

PriceSeries gen_synthetic_prices(std::uint64_t seed, int horizon, const SyntheticPriceSpec& spec) {
  spec.validate();
  if (horizon < 1) throw ParameterError("horizon must be at least 1");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::exponential_distribution<double> spike(1.0);

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(horizon));
  double lambda = std::max(0.0, spec.start.value_or(spec.mean));
  out.push_back(lambda);
  for (int t = 1; t < horizon; ++t) {
    // Draw every variate each step so the stream layout does not depend on parameters.
    const double eps = noise(gen);
    const bool jump = coin(gen) < spec.spike_prob;
    const double size = spike(gen) * spec.spike_scale;
    lambda += spec.reversion * (spec.mean - lambda) + spec.vol * eps + (jump ? size : 0.0);
    lambda = std::max(0.0, lambda);
    out.push_back(lambda);
  }
  return PriceSeries(std::move(out));
}

// ------------------------------------------------------------ configuration

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::NoPrediction: return "no_prediction";
    case Algorithm::Rhgd: return "rhgd";
    case Algorithm::Rhag: return "rhag";
    case Algorithm::RollingRobust: return "rolling_robust";
  }
  return "unknown";
}

std::string to_string(PredictorKind k) {
  switch (k) {
    case PredictorKind::None: return "none";
    case PredictorKind::Perfect: return "perfect";
    case PredictorKind::Noisy: return "noisy";
    case PredictorKind::Ar: return "ar";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  consumer.validate();
  if (methods.empty()) throw ParameterError("at least one method is required");
  if (days < 1) throw ParameterError("days must be at least 1");
  if (prices.file && days != 1) throw ParameterError("a price file supplies exactly one day");
  if (!prices.file) prices.synthetic.validate();
  if (grid_levels < 2 || robust_levels < 2) throw ParameterError("grid levels must be at least 2");
  if (threads < 1) throw ParameterError("threads must be at least 1");
  if (timing_repeats < 1) throw ParameterError("timing_repeats must be at least 1");
  if (predictor.sigma_rel < 0.0) throw ParameterError("sigma_rel must be non-negative");
  if (x0 && !consumer.box().contains(*x0)) throw ParameterError("x0 outside [x_min, x_max]");
  for (const auto& m : methods) {
    if (m.name.empty()) throw ParameterError("method names must be non-empty");
    switch (m.algorithm) {
      case Algorithm::NoPrediction:
        break;
      case Algorithm::Rhgd:
      case Algorithm::Rhag: {
        if (m.window < 1) throw ParameterError(m.name + ": receding-horizon window must be >= 1");
        if (m.predictor == PredictorKind::None) {
          throw ParameterError(m.name + ": window > 0 requires a predictor");
        }
        HyperParams hp = hyper;
        hp.window = m.window;
        hp.validate();
        break;
      }
      case Algorithm::RollingRobust:
        if (!robust) throw ParameterError(m.name + ": rolling_robust requires a robust section");
        if (m.predictor == PredictorKind::None) {
          throw ParameterError(m.name + ": rolling_robust requires a predictor");
        }
        robust->validate();
        break;
    }
    if (m.algorithm == Algorithm::NoPrediction) hyper.validate();
  }
  std::map<std::string, int> seen;
  for (const auto& m : methods) {
    if (++seen[m.name] > 1) throw ParameterError("duplicate method name '" + m.name + "'");
    if (m.name == "offline") throw ParameterError("'offline' is reserved for the hindsight row");
  }
}

double ExperimentConfig::start_point() const { return x0.value_or(default_x0(consumer)); }

ExperimentConfig parse_config(const json& doc, const fs::path& base_dir) {
  ExperimentConfig cfg;
  try {
    if (doc.contains("consumer")) {
      const json& c = doc.at("consumer");
      read_opt(c, "x_min", cfg.consumer.x_min);
      read_opt(c, "x_max", cfg.consumer.x_max);
      read_opt(c, "e_total", cfg.consumer.e_total);
      read_opt(c, "u", cfg.consumer.u);
      read_opt(c, "horizon", cfg.consumer.horizon);
      read_opt(c, "interval_hours", cfg.consumer.interval_hours);
      cfg.consumer.r_up = ConsumerConfig::ramp_per_interval(2.0, cfg.consumer.interval_hours);
      cfg.consumer.r_dn = cfg.consumer.r_up;
      if (c.contains("ramp_up_mw_per_h")) {
        cfg.consumer.r_up = ConsumerConfig::ramp_per_interval(
            c.at("ramp_up_mw_per_h").get<double>(), cfg.consumer.interval_hours);
      }
      if (c.contains("ramp_dn_mw_per_h")) {
        cfg.consumer.r_dn = ConsumerConfig::ramp_per_interval(
            c.at("ramp_dn_mw_per_h").get<double>(), cfg.consumer.interval_hours);
      }
      read_opt(c, "r_up", cfg.consumer.r_up);
      read_opt(c, "r_dn", cfg.consumer.r_dn);
    }
    if (doc.contains("hyper")) {
      const json& h = doc.at("hyper");
      read_opt(h, "eta", cfg.hyper.eta);
      read_opt(h, "mu", cfg.hyper.mu);
      read_opt(h, "eta1", cfg.hyper.eta1);
      read_opt(h, "mu1", cfg.hyper.mu1);
      read_opt(h, "eta2", cfg.hyper.eta2);
      read_opt(h, "mu2", cfg.hyper.mu2);
      read_opt(h, "gamma", cfg.hyper.gamma);
      read_opt(h, "rho", cfg.hyper.rho);
      read_opt(h, "zeta", cfg.hyper.zeta);
      read_opt(h, "window", cfg.hyper.window);
    }
    if (doc.contains("predictor")) {
      const json& p = doc.at("predictor");
      if (p.contains("kind")) cfg.predictor.kind = predictor_from(p.at("kind").get<std::string>());
      read_opt(p, "sigma_rel", cfg.predictor.sigma_rel);
      read_opt(p, "seed", cfg.predictor.seed);
      read_opt(p, "ar_order", cfg.predictor.ar_order);
      read_opt(p, "ar_window", cfg.predictor.ar_window);
    }
    if (doc.contains("methods")) {
      for (const json& m : doc.at("methods")) {
        MethodSpec spec;
        spec.algorithm = algorithm_from(m.at("algorithm").get<std::string>());
        spec.name = m.value("name", to_string(spec.algorithm));
        const bool needs_predictor = spec.algorithm != Algorithm::NoPrediction;
        spec.predictor = needs_predictor ? cfg.predictor.kind : PredictorKind::None;
        if (m.contains("predictor")) spec.predictor = predictor_from(m.at("predictor").get<std::string>());
        spec.window = spec.algorithm == Algorithm::Rhgd || spec.algorithm == Algorithm::Rhag
                          ? cfg.hyper.window
                          : 0;
        read_opt(m, "window", spec.window);
        cfg.methods.push_back(std::move(spec));
      }
    }
    if (doc.contains("robust") && !doc.at("robust").is_null()) {
      const json& r = doc.at("robust");
      RobustSpec rs;
      read_opt(r, "gamma_frac", rs.gamma_frac);
      read_opt(r, "dev_frac", rs.dev_frac);
      read_opt(r, "n_levels", cfg.robust_levels);
      cfg.robust = rs;
    }
    if (doc.contains("grid")) read_opt(doc.at("grid"), "n_levels", cfg.grid_levels);
    if (doc.contains("prices")) {
      const json& p = doc.at("prices");
      if (p.contains("file")) cfg.prices.file = resolve(base_dir, p.at("file").get<std::string>());
      if (p.contains("prior_file")) {
        cfg.prices.prior_file = resolve(base_dir, p.at("prior_file").get<std::string>());
      }
      read_opt(p, "first_seed", cfg.prices.first_seed);
      if (p.contains("synthetic")) {
        const json& s = p.at("synthetic");
        read_opt(s, "mean", cfg.prices.synthetic.mean);
        read_opt(s, "reversion", cfg.prices.synthetic.reversion);
        read_opt(s, "vol", cfg.prices.synthetic.vol);
        read_opt(s, "spike_prob", cfg.prices.synthetic.spike_prob);
        read_opt(s, "spike_scale", cfg.prices.synthetic.spike_scale);
        if (s.contains("start") && !s.at("start").is_null()) {
          cfg.prices.synthetic.start = s.at("start").get<double>();
        }
      }
    }
    if (doc.contains("output_dir")) {
      cfg.output_dir = resolve(base_dir, doc.at("output_dir").get<std::string>());
    }
    read_opt(doc, "days", cfg.days);
    if (doc.contains("x0") && !doc.at("x0").is_null()) cfg.x0 = doc.at("x0").get<double>();
    read_opt(doc, "hard_finish", cfg.hard_finish);
    read_opt(doc, "report_wall_time", cfg.report_wall_time);
    read_opt(doc, "write_traces", cfg.write_traces);
    read_opt(doc, "threads", cfg.threads);
    read_opt(doc, "timing_repeats", cfg.timing_repeats);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParameterError(path.string() + ": " + e.what());
  }
  return parse_config(doc, path.parent_path());
}

// ------------------------------------------------------------------ running

DayData day_data(const ExperimentConfig& cfg, int day) {
  const int T = cfg.consumer.horizon;
  DayData d;
  if (cfg.prices.file) {
    d.prices = load_prices_csv(*cfg.prices.file, T);
    if (cfg.prices.prior_file) {
      const PriceSeries prior = load_prices_csv(*cfg.prices.prior_file);
      d.prior.assign(prior.values().begin(), prior.values().end());
    }
    return d;
  }
  const auto seed = cfg.prices.first_seed + static_cast<std::uint64_t>(day);
  d.prices = gen_synthetic_prices(seed, T, cfg.prices.synthetic);
  const PriceSeries prior = gen_synthetic_prices(seed - 1, T, cfg.prices.synthetic);
  d.prior.assign(prior.values().begin(), prior.values().end());
  return d;
}

std::unique_ptr<Predictor> make_predictor(const ExperimentConfig& cfg, PredictorKind kind,
                                          const DayData& data, int day) {
  switch (kind) {
    case PredictorKind::None: return nullptr;
    case PredictorKind::Perfect: return std::make_unique<PerfectPredictor>();
    case PredictorKind::Noisy:
      return std::make_unique<NoisyPredictor>(cfg.predictor.sigma_rel,
                                              cfg.predictor.seed + static_cast<std::uint64_t>(day));
    case PredictorKind::Ar:
      return std::make_unique<ArPredictor>(cfg.predictor.ar_order, cfg.predictor.ar_window,
                                           data.prior);
  }
  return nullptr;
}

RunTrace run_method(const ExperimentConfig& cfg, const MethodSpec& method, const DayData& data,
                    int day) {
  const auto predictor = make_predictor(cfg, method.predictor, data, day);
  const double x0 = cfg.start_point();
  switch (method.algorithm) {
    case Algorithm::RollingRobust: {
      const Grid grid(cfg.consumer, cfg.robust_levels);
      return run_rolling_robust(cfg.consumer, data.prices, *predictor, *cfg.robust, grid, x0);
    }
    case Algorithm::NoPrediction:
      return run_online(Method::NoPrediction, data.prices, nullptr, cfg.consumer, cfg.hyper, x0,
                        {cfg.hard_finish});
    case Algorithm::Rhgd:
    case Algorithm::Rhag: {
      HyperParams hp = cfg.hyper;
      hp.window = method.window;
      const Method m = method.algorithm == Algorithm::Rhgd ? Method::Rhgd : Method::Rhag;
      return run_online(m, data.prices, predictor.get(), cfg.consumer, hp, x0, {cfg.hard_finish});
    }
  }
  throw ParameterError("unhandled algorithm");
}

void write_trace_csv(const fs::path& path, const RunTrace& trace, const PriceSeries& prices) {
  std::ofstream out = open_out(path);
  out << "interval,x,delta,lambda,stage_cost,cum_cost\n";
  for (std::size_t t = 0; t < trace.committed.size(); ++t) {
    out << t << ',' << fixed10(trace.committed[t]) << ',' << fixed10(trace.deltas[t]) << ','
        << fixed10(prices[t]) << ',' << fixed10(trace.per_stage_cost[t]) << ','
        << fixed10(trace.cumulative_cost[t]) << '\n';
  }
}

void write_summary_csv(const fs::path& path, const std::vector<SummaryRow>& rows) {
  std::ofstream out = open_out(path);
  out << "method,mean_profit,mean_ratio_pct,mean_shortfall_mwh,mean_wall_time_s\n";
  for (const auto& r : rows) {
    out << r.method << ',' << fixed10(r.mean_profit) << ',' << fixed10(r.mean_ratio_pct) << ','
        << fixed10(r.mean_shortfall_mwh) << ',' << fixed10(r.mean_wall_time_s) << '\n';
  }
}

SuiteResult run_suite(const ExperimentConfig& cfg) {
  cfg.validate();
  SuiteResult result;
  result.days.resize(static_cast<std::size_t>(cfg.days));
  std::vector<std::string> errors(static_cast<std::size_t>(cfg.days));
  std::vector<ErrorKind> error_kinds(static_cast<std::size_t>(cfg.days), ErrorKind::Numeric);
  std::vector<PriceSeries> day_prices(static_cast<std::size_t>(cfg.days));

  auto run_day = [&](int day) {
    const auto k = static_cast<std::size_t>(day);
    std::string stage = "offline";
    try {
      const DayData data = day_data(cfg, day);
      const Grid grid(cfg.consumer, cfg.grid_levels);
      const OfflineSolution off =
          solve_offline_lagrangian(cfg.consumer, data.prices, grid, cfg.start_point());
      DayResult& out = result.days[k];
      out.offline_profit = -off.cost;
      out.offline_allowance = off.repair_gap + off.grid_bound;
      for (const auto& m : cfg.methods) {
        stage = m.name;
        out.traces.push_back(run_method(cfg, m, data, day));
      }
      day_prices[k] = data.prices;
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "day " << day << ", method " << stage << ": " << e.what();
      errors[k] = os.str();
      if (const auto* err = dynamic_cast<const Error*>(&e)) error_kinds[k] = err->kind();
    }
  };

  const int workers = std::min(cfg.threads, cfg.days);
  if (workers <= 1) {
    for (int d = 0; d < cfg.days; ++d) run_day(d);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int d = next++; d < cfg.days; d = next++) run_day(d);
      });
    }
  }
  for (std::size_t k = 0; k < errors.size(); ++k) {
    if (!errors[k].empty()) throw Error(error_kinds[k], errors[k]);
  }

  // Aggregate in day order, then sort rows by name.
  const double n = cfg.days;
  std::vector<SummaryRow> rows;
  SummaryRow offline{"offline", 0.0, 0.0, 0.0, 0.0};
  double offline_total = 0.0;
  for (const auto& d : result.days) {
    offline.mean_profit += d.offline_profit / n;
    offline_total += d.offline_profit;
  }
  // Ratios pool profits over days; single-day ratios explode when the hindsight
  // profit is near zero. Undefined (NaN) unless the pooled hindsight profit is positive.
  offline.mean_ratio_pct = 100.0;
  rows.push_back(offline);
  for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
    SummaryRow row{cfg.methods[i].name, 0.0, 0.0, 0.0, 0.0};
    double total = 0.0;
    for (const auto& d : result.days) {
      const RunTrace& tr = d.traces[i];
      total += tr.profit();
      row.mean_profit += tr.profit() / n;
      row.mean_shortfall_mwh += tr.report.long_term_shortfall / n;
      if (cfg.report_wall_time) row.mean_wall_time_s += tr.wall_time / n;
    }
    row.mean_ratio_pct = offline_total > 0.0 ? 100.0 * total / offline_total
                                             : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const SummaryRow& a, const SummaryRow& b) { return a.method < b.method; });
  result.summary = rows;

  write_summary_csv(cfg.output_dir / "summary.csv", rows);
  if (cfg.write_traces) {
    for (int d = 0; d < cfg.days; ++d) {
      for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
        std::ostringstream name;
        name << "trace_" << cfg.methods[i].name << "_day" << std::setw(3) << std::setfill('0') << d
             << ".csv";
        write_trace_csv(cfg.output_dir / name.str(), result.days[static_cast<std::size_t>(d)].traces[i],
                        day_prices[static_cast<std::size_t>(d)]);
      }
    }
  }
  return result;
}

std::vector<WindowSweepRow> emit_window_sweep(const ExperimentConfig& cfg, const MethodSpec& method,
                                              const std::vector<int>& windows,
                                              const fs::path& out_csv) {
  if (method.algorithm != Algorithm::Rhgd && method.algorithm != Algorithm::Rhag) {
    throw ParameterError("window sweep needs rhgd or rhag");
  }
  if (method.predictor == PredictorKind::None) throw ParameterError("window sweep needs a predictor");
  for (int w : windows) {
    if (w < 1) throw ParameterError("window sweep: W must be at least 1 for receding-horizon methods");
  }
  const DayData data = day_data(cfg, 0);
  std::vector<WindowSweepRow> rows;
  for (int w : windows) rows.push_back({w, 0.0, std::numeric_limits<double>::infinity()});
  // Repeats interleave the windows so clock drift hits every window alike.
  for (int rep = 0; rep < cfg.timing_repeats; ++rep) {
    for (auto& row : rows) {
      MethodSpec m = method;
      m.window = row.window;
      const RunTrace tr = run_method(cfg, m, data, 0);
      row.profit = tr.profit();
      row.wall_time_s = std::min(row.wall_time_s, tr.wall_time);
    }
  }
  std::ofstream out = open_out(out_csv);
  out << "W,profit,wall_time_s\n";
  for (const auto& r : rows) out << r.window << ',' << fixed10(r.profit) << ',' << fixed10(r.wall_time_s) << '\n';
  return rows;
}

std::vector<GammaSweepRow> emit_gamma_sweep(const ExperimentConfig& cfg,
                                            const std::vector<double>& gammas,
                                            const fs::path& out_csv) {
  if (!cfg.robust) throw ParameterError("gamma sweep needs a robust section");
  const DayData data = day_data(cfg, 0);
  PredictorKind kind = cfg.predictor.kind;
  for (const auto& m : cfg.methods) {
    if (m.algorithm == Algorithm::RollingRobust) kind = m.predictor;
  }
  if (kind == PredictorKind::None) throw ParameterError("gamma sweep needs a predictor");
  const auto predictor = make_predictor(cfg, kind, data, 0);
  const Grid grid(cfg.consumer, cfg.robust_levels);
  std::vector<GammaSweepRow> rows;
  for (double g : gammas) {
    RobustSpec spec = *cfg.robust;
    spec.gamma_frac = g;
    spec.validate();
    const RunTrace tr =
        run_rolling_robust(cfg.consumer, data.prices, *predictor, spec, grid, cfg.start_point());
    rows.push_back({g, tr.profit(), tr.wall_time});
  }
  std::ofstream out = open_out(out_csv);
  out << "gamma_frac,profit,wall_time_s\n";
  for (const auto& r : rows) {
    out << fixed10(r.gamma_frac) << ',' << fixed10(r.profit) << ',' << fixed10(r.wall_time_s) << '\n';
  }
  return rows;
}

}  // namespace odr
