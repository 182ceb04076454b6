// Acceptance checks; one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "odr/algorithms.hpp"
#include "odr/core_oco.hpp"
#include "odr/dr_model.hpp"
#include "odr/harness.hpp"
#include "odr/offline_bench.hpp"
#include "odr/predictors.hpp"

namespace fs = std::filesystem;
using namespace odr;

namespace {

const fs::path kData = fs::path(ODR_SOURCE_DIR) / "data";
int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Exhaustive search over grid trajectories; with_floor adds sum x >= E_T.
double enumerate(const CostTable& c, const ConsumerConfig& cfg, const Grid& g, double x0,
                 bool with_floor) {
  const int T = c.stages(), n = g.size();
  std::vector<int> idx(T, 0);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    bool ok = true;
    double prev = x0, cost = 0.0, energy = 0.0;
    for (int t = 0; t < T && ok; ++t) {
      const double x = g.level(idx[t]);
      ok = x - prev <= cfg.r_up + 1e-9 && prev - x <= cfg.r_dn + 1e-9;
      cost += c.at(t, idx[t]);
      energy += x;
      prev = x;
    }
    if (ok && with_floor) ok = energy >= cfg.e_total - 1e-9;
    if (ok) best = std::min(best, cost);
    int t = T - 1;
    while (t >= 0 && ++idx[t] == n) idx[t--] = 0;
    if (t < 0) break;
  }
  return best;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(101);
  std::uniform_real_distribution<double> price(40.0, 110.0), ramp(0.3, 1.2), frac(0.2, 0.8);
  bool ok = true;
  double worst_excess = 0.0;
  for (int k = 0; k < 50; ++k) {
    ConsumerConfig cfg;
    cfg.x_min = 0.0;
    cfg.x_max = 2.0;
    cfg.horizon = 6;
    cfg.r_up = cfg.r_dn = ramp(gen);
    const double x0 = 1.0;
    cfg.e_total = frac(gen) * max_reachable_energy(x0, 6, cfg);
    std::vector<double> p(6);
    for (double& v : p) v = price(gen);
    const PriceSeries ps(p);
    const Grid grid(cfg, 9);

    const auto brute = solve_offline_bruteforce(cfg, ps, grid, x0);
    const auto lag = solve_offline_lagrangian(cfg, ps, grid, x0);
    const double excess = lag.cost - brute.cost;
    worst_excess = std::max(worst_excess, excess - lag.repair_gap);
    if (excess < -1e-9 || excess > lag.repair_gap + 1e-9) ok = false;

    const CostTable c = CostTable::linear(p, cfg.u, grid);
    if (dp_ramp_chain(c, cfg, grid, x0).value != enumerate(c, cfg, grid, x0, false)) ok = false;
    if (std::abs(brute.cost - enumerate(c, cfg, grid, x0, true)) > 1e-9) ok = false;
  }
  const double secs = seconds_since(t0);
  report(1, ok && secs < 10.0,
         fmt("50 instances T=6 n=9, worst (lag-brute)-gap %.2e, %.2f s (limit 10 s)", worst_excess,
             secs));
}

void criterion2() {
  std::mt19937_64 gen(202);
  ConsumerConfig cfg;
  cfg.horizon = 8;
  cfg.e_total = 3.0;
  std::uniform_real_distribution<double> price(20.0, 200.0), x(cfg.x_min, cfg.x_max),
      delta(0.0, 50.0), gamma(0.0, 2.0), rho(0.1, 30.0);
  const double eps = 1e-5;
  double worst_x = 0.0, worst_d = 0.0, worst_h = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double lam = price(gen), d = delta(gen), g = gamma(gen), x1 = x(gen);
    worst_x = std::max(worst_x, check_gradient(
        [&](double v) { return augmented_loss(lam, cfg, v, d, g); }, grad_x_F(lam, cfg, d), x1, eps));
    worst_d = std::max(worst_d, check_gradient(
        [&](double v) { return augmented_loss(lam, cfg, x1, v, g); },
        grad_delta_F(x1, d, cfg, g), d, eps));

    std::vector<double> ps(8), xs(8), ds(8);
    for (int t = 0; t < 8; ++t) {
      ps[t] = price(gen);
      xs[t] = x(gen);
      ds[t] = delta(gen);
    }
    const double x0 = x(gen), r = rho(gen);
    const int m = k % 8;
    const bool last = m == 7;
    const double xp = m == 0 ? x0 : xs[m - 1];
    const double xn = last ? 0.0 : xs[m + 1];
    const double analytic = grad_h(ps[m], cfg, ds[m], xp, xs[m], xn, r, last);
    worst_h = std::max(worst_h, check_gradient(
        [&](double v) {
          auto y = xs;
          y[m] = v;
          return smoothed_total(ps, cfg, y, ds, x0, r, g);
        },
        analytic, xs[m], eps));
  }
  const double worst = std::max({worst_x, worst_d, worst_h});
  report(2, worst <= 1e-6,
         fmt("max rel err grad_x %.1e, grad_delta %.1e, grad_h %.1e (limit 1e-6)", worst_x, worst_d,
             worst_h));
}

struct Fixture {
  ExperimentConfig cfg;
  DayData day;
  OfflineSolution oracle;
};

Fixture load_fixture() {
  Fixture f{load_config(kData / "fixture_config.json"), {}, {}};
  f.day = day_data(f.cfg, 0);
  f.oracle = solve_offline_lagrangian(f.cfg.consumer, f.day.prices,
                                      Grid(f.cfg.consumer, f.cfg.grid_levels), f.cfg.start_point());
  return f;
}

void criteria3and4(const Fixture& f) {
  std::vector<MethodSpec> runs = f.cfg.methods;
  for (int w : {1, 2, 3, 6, 12}) {
    runs.push_back({"rhgd_w" + std::to_string(w), Algorithm::Rhgd, PredictorKind::Perfect, w});
    runs.push_back({"rhag_w" + std::to_string(w), Algorithm::Rhag, PredictorKind::Perfect, w});
  }
  runs.push_back({"rolling_robust", Algorithm::RollingRobust, PredictorKind::Perfect, 0});

  const double e = f.cfg.consumer.e_total;
  bool feas = true, bound = true;
  double worst_short = 0.0, min_margin = std::numeric_limits<double>::infinity();
  for (const auto& m : runs) {
    const RunTrace tr = run_method(f.cfg, m, f.day, 0);
    const bool neg = std::any_of(tr.deltas.begin(), tr.deltas.end(), [](double d) { return d < 0.0; });
    if (tr.report.box_violations || tr.report.ramp_violations || neg) feas = false;
    worst_short = std::max(worst_short, tr.report.long_term_shortfall);
    const double margin = tr.cost() - (f.oracle.cost - f.oracle.repair_gap);
    min_margin = std::min(min_margin, margin);
    if (margin < 0.0) bound = false;
  }
  report(3, feas && worst_short <= 0.05 * e,
         fmt("%.0f fixture runs, no box/ramp violations, delta >= 0; worst shortfall %.3f MWh "
             "(limit %.3f)", static_cast<double>(runs.size()), worst_short, 0.05 * e));
  report(4, bound,
         fmt("min C_online - (oracle %.3f - repair_gap %.2e) = %.3f", f.oracle.cost,
             f.oracle.repair_gap, min_margin));
}

void criterion5(const Fixture& f) {
  const PerfectPredictor pf;
  const double x0 = f.cfg.start_point();
  HyperParams hp = f.cfg.hyper;
  auto profit = [&](Method m, int w) {
    hp.window = std::max(w, 1);
    return run_online(m, f.day.prices, &pf, f.cfg.consumer, hp, x0).profit();
  };
  const double base = profit(Method::NoPrediction, 0);
  std::vector<double> g;
  for (int w : {1, 3, 6, 12}) g.push_back(profit(Method::Rhgd, w));
  const double range = *std::max_element(g.begin(), g.end()) - *std::min_element(g.begin(), g.end());
  bool mono = true;
  for (std::size_t i = 1; i < g.size(); ++i) mono = mono && g[i] >= g[i - 1] - 0.01 * range;
  const double a1 = profit(Method::Rhag, 1), a2 = profit(Method::Rhag, 2);
  const double g2 = profit(Method::Rhgd, 2);
  std::ostringstream os;
  os << "no_pred " << base << "; rhgd W1/3/6/12 " << g[0] << " " << g[1] << " " << g[2] << " "
     << g[3] << "; rhag-rhgd W1 " << a1 - g[0] << " W2 " << a2 - g2;
  report(5, g[0] > base && mono && a1 >= g[0] && a2 >= g2, os.str());
}

void criterion6(const Fixture& f) {
  const auto& hp = f.cfg.hyper;
  const std::vector<double> deltas(static_cast<std::size_t>(f.cfg.consumer.horizon), 0.0);
  SmoothedSolveOptions plain;
  plain.tol = 1e-6;
  SmoothedSolveOptions acc = plain;
  acc.accelerated = true;
  const auto a = minimize_smoothed(f.day.prices, f.cfg.consumer, f.cfg.start_point(), hp.rho,
                                   deltas, hp.gamma, plain);
  const auto b = minimize_smoothed(f.day.prices, f.cfg.consumer, f.cfg.start_point(), hp.rho,
                                   deltas, hp.gamma, acc);
  report(6, a.converged && b.converged && b.iterations < a.iterations,
         fmt("iterations to 1e-6: gradient %.0f, accelerated %.0f", a.iterations, b.iterations));
}

void criterion7(const Fixture& f) {
  const auto& cfg = f.cfg.consumer;
  const Grid grid(cfg, f.cfg.robust_levels);
  const PerfectPredictor pf;
  const double x0 = f.cfg.start_point();
  const auto& prices = f.day.prices;

  // Nominal rolling plan, re-solved from scratch at every stage.
  Trajectory nominal;
  double prev = x0, used = 0.0;
  for (int t = 1; t <= cfg.horizon; ++t) {
    const Forecast fc = pf.forecast(prices, t, cfg.horizon - t + 1);
    const auto s = solve_energy_floor(CostTable::linear(fc.values, cfg.u, grid),
                                      std::max(0.0, cfg.e_total - used), cfg, grid, prev, 1e-6,
                                      -1.0, true);
    const double x = project_interval(s.x.front(), ramp_set(prev, cfg));
    nominal.push_back(x);
    used += x;
    prev = x;
  }
  const auto zero_budget = run_rolling_robust(cfg, prices, pf, {0.0, 0.1}, grid, x0).committed;
  const auto zero_dev = run_rolling_robust(cfg, prices, pf, {0.3, 0.0}, grid, x0).committed;
  const bool ident = zero_budget == nominal && zero_dev == nominal;

  std::vector<double> obj;
  for (double g : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    obj.push_back(robust_inner(cfg, prices.values(), {g, 0.1}, grid, x0, cfg.e_total).objective);
  }
  const bool mono = std::is_sorted(obj.begin(), obj.end());
  std::ostringstream os;
  os << "gamma=0 and dev=0 identical to nominal rolling: " << (ident ? "yes" : "no")
     << "; objective over gamma 0..1:";
  for (double v : obj) os << " " << v;
  report(7, ident && mono, os.str());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool same_tree(const fs::path& a, const fs::path& b, int& files) {
  std::vector<fs::path> names;
  for (const auto& e : fs::directory_iterator(a)) names.push_back(e.path().filename());
  std::size_t count_b = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(b)) ++count_b;
  if (names.size() != count_b) return false;
  files = static_cast<int>(names.size());
  for (const auto& n : names) {
    if (!fs::exists(b / n) || slurp(a / n) != slurp(b / n)) return false;
  }
  return true;
}

void criteria8and9() {
  ExperimentConfig cfg = load_config(kData / "suite_config.json");
  const fs::path root = fs::temp_directory_path() / "odr_acceptance";
  fs::remove_all(root);
  cfg.output_dir = root / "run1";

  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult res = run_suite(cfg);
  const double secs = seconds_since(t0);

  double off = 0.0, allow = 0.0;
  for (const auto& d : res.days) {
    off += d.offline_profit;
    allow += d.offline_allowance;
  }
  const double cap = 100.0 + 100.0 * allow / off;
  double base = 0.0;
  for (const auto& r : res.summary)
    if (r.method == "no_prediction") base = r.mean_ratio_pct;
  bool ok = cfg.days == 100 && secs < 300.0;
  std::ostringstream os;
  os << cfg.days << " days in " << secs << " s; ratio cap " << cap << "%;";
  for (const auto& r : res.summary) {
    os << " " << r.method << " " << r.mean_ratio_pct;
    if (!(r.mean_ratio_pct <= cap)) ok = false;
    if (r.method != "no_prediction" && r.method != "offline" && !(r.mean_ratio_pct >= base)) ok = false;
  }
  report(8, ok, os.str());

  cfg.output_dir = root / "run2";
  run_suite(cfg);
  int files = 0;
  const bool same = same_tree(root / "run1", root / "run2", files);
  report(9, same && files > 0,
         fmt("two suite runs, %.0f output files, byte-identical: ", files) +
             (same ? "yes" : "no"));
  fs::remove_all(root);
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    const Fixture f = load_fixture();
    criteria3and4(f);
    criterion5(f);
    criterion6(f);
    criterion7(f);
    criteria8and9();
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
