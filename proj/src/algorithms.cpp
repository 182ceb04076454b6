#include "odr/algorithms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "odr/core_oco.hpp"
#include "odr/errors.hpp"

namespace odr {

std::string to_string(Method m) {
  switch (m) {
    case Method::NoPrediction: return "no_prediction";
    case Method::Rhgd: return "rhgd";
    case Method::Rhag: return "rhag";
  }
  return "unknown";
}

Method method_from_string(const std::string& name) {
  if (name == "no_prediction") return Method::NoPrediction;
  if (name == "rhgd") return Method::Rhgd;
  if (name == "rhag") return Method::Rhag;
  throw ParameterError("unknown method '" + name + "'");
}

void HyperParams::validate() const {
  for (double s : {eta, mu, eta1, mu1, eta2, mu2}) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ParameterError("step sizes must be positive");
  }
  if (gamma < 0.0) throw ParameterError("gamma must be non-negative");
  if (rho < 0.0) throw ParameterError("rho must be non-negative");
  if (zeta < 0.0 || zeta * eta2 > 1.0) throw ParameterError("need 0 <= zeta and zeta * eta2 <= 1");
  if (window < 0) throw ParameterError("window must be non-negative");
}

double HyperParams::xi() const { return xi_from(zeta, eta2); }

StepResult step_no_prediction(double x_prev, double delta_prev, double lambda_prev,
                              const ConsumerConfig& cfg, const HyperParams& hp) {
  const double raw_x = x_prev - hp.eta * grad_x_F(lambda_prev, cfg, delta_prev);
  const double raw_d = delta_prev + hp.mu * grad_delta_F(x_prev, delta_prev, cfg, hp.gamma);
  return {project_interval(raw_x, ramp_set(x_prev, cfg)),
          project_interval(raw_d, Interval::nonnegative())};
}

DecisionMatrix::DecisionMatrix(int window, double x0) : window_(window) {
  if (window < 1) throw ParameterError("receding-horizon window must be at least 1");
  const auto n = static_cast<std::size_t>(window) + 1;
  for (int i = 0; i < 3; ++i) {
    cols_[static_cast<std::size_t>(i)] =
        Column{i - 2, std::vector<double>(n, x0), std::vector<double>(n, x0),
               std::vector<double>(n, 0.0)};
  }
}

const DecisionMatrix::Column& DecisionMatrix::column(int round) const {
  for (const auto& c : cols_) {
    if (c.round == round) return c;
  }
  std::ostringstream os;
  os << "round " << round << " not held (latest " << cols_[2].round << ")";
  throw InputError(os.str());
}

std::size_t DecisionMatrix::offset(int round, int m) const {
  if (m < round || m > round + window_) {
    std::ostringstream os;
    os << "stage " << m << " outside round " << round << " window";
    throw InputError(os.str());
  }
  return static_cast<std::size_t>(m - round);
}

void DecisionMatrix::push(Column col) {
  cols_[0] = std::move(cols_[1]);
  cols_[1] = std::move(cols_[2]);
  cols_[2] = std::move(col);
}

StepResult receding_step(DecisionMatrix& state, std::span<const double> forecast,
                         const ConsumerConfig& cfg, const HyperParams& hp,
                         double x_committed_prev, bool accelerated) {
  const int W = state.window();
  const int T = cfg.horizon;
  const int t = state.round() + 1;
  if (t > T) throw InputError("receding_step: horizon already exhausted");
  const int needed = std::min(W, T - t + 1);
  if (static_cast<int>(forecast.size()) < needed) {
    std::ostringstream os;
    os << "forecast at stage " << t << " has " << forecast.size() << " prices, need " << needed;
    throw InputError(os.str());
  }

  const Interval box = cfg.box();
  const Interval half_line = Interval::nonnegative();
  const double xi = accelerated ? hp.xi() : 0.0;
  const auto& prev = state.column(t - 1);
  const auto& prev2 = state.column(t - 2);
  auto px = [&](int m) { return prev.x[static_cast<std::size_t>(m - (t - 1))]; };
  auto pd = [&](int m) { return prev.delta[static_cast<std::size_t>(m - (t - 1))]; };
  auto py = [&](int m) { return prev.y[static_cast<std::size_t>(m - (t - 1))]; };
  auto p2x = [&](int m) { return prev2.x[static_cast<std::size_t>(m - (t - 2))]; };
  auto p2y = [&](int m) { return prev2.y[static_cast<std::size_t>(m - (t - 2))]; };

  // Entries past the horizon are never read; they carry the previous round's values.
  // Reuse the storage of round t - 3, which is never read again.
  DecisionMatrix::Column cur;
  cur.x.swap(state.cols_[0].x);
  cur.y.swap(state.cols_[0].y);
  cur.delta.swap(state.cols_[0].delta);
  cur.round = t;
  cur.x.resize(static_cast<std::size_t>(W) + 1);
  cur.y.resize(cur.x.size());
  cur.delta.resize(cur.x.size());
  for (int m = t; m <= t + W; ++m) {
    const int src = std::min(m, t - 1 + W);
    const auto k = static_cast<std::size_t>(m - t);
    cur.x[k] = px(src);
    cur.y[k] = py(src);
    cur.delta[k] = pd(src);
  }
  auto cx = [&](int m) -> double& { return cur.x[static_cast<std::size_t>(m - t)]; };
  auto cy = [&](int m) -> double& { return cur.y[static_cast<std::size_t>(m - t)]; };
  auto cd = [&](int m) -> double& { return cur.delta[static_cast<std::size_t>(m - t)]; };
  auto price = [&](int m) { return forecast[static_cast<std::size_t>(m - t)]; };

  const int tail = t + W;
  if (tail <= T) {
    const int src = tail - 1;
    cx(tail) = project_interval(px(src) - hp.eta1 * grad_x_F(price(src), cfg, pd(src)), box);
    cd(tail) = project_interval(
        pd(src) + hp.mu1 * grad_delta_F(px(src), pd(src), cfg, hp.gamma), half_line);
    cy(tail) = cx(tail);
  }

  const int last = std::min(t + W - 1, T);
  for (int m = last; m >= t; --m) {
    const bool is_last = (m == T);
    if (accelerated) {
      const double next = is_last ? 0.0 : cy(m + 1);
      const double g = grad_h(price(m), cfg, pd(m), p2y(m - 1), py(m), next, hp.rho, is_last);
      cx(m) = project_interval(py(m) - hp.eta2 * g, box);
      cy(m) = (1.0 + xi) * cx(m) - xi * px(m);
    } else {
      const double next = is_last ? 0.0 : cx(m + 1);
      const double g = grad_h(price(m), cfg, pd(m), p2x(m - 1), px(m), next, hp.rho, is_last);
      cx(m) = project_interval(px(m) - hp.eta2 * g, box);
      cy(m) = cx(m);
    }
    cd(m) = project_interval(pd(m) + hp.mu2 * grad_delta_F(px(m), pd(m), cfg, hp.gamma),
                             half_line);
  }

  StepResult out{project_interval(cx(t), ramp_set(x_committed_prev, cfg)), cd(t)};
  state.push(std::move(cur));
  return out;
}

double default_x0(const ConsumerConfig& cfg) {
  return project_interval(cfg.pace(), cfg.box());
}

RunTrace run_online(Method method, const PriceSeries& prices, const Predictor* predictor,
                    const ConsumerConfig& cfg, const HyperParams& hp, double x0,
                    const RunOptions& opts) {
  cfg.validate();
  hp.validate();
  prices.require_length(cfg.horizon);
  if (!cfg.box().contains(x0)) throw ParameterError("x0 outside [x_min, x_max]");
  const bool receding = method != Method::NoPrediction;
  if (receding && predictor == nullptr) {
    throw ParameterError(to_string(method) + " requires a predictor");
  }
  if (receding && hp.window < 1) {
    throw ParameterError(to_string(method) + " requires window >= 1");
  }

  const auto start = std::chrono::steady_clock::now();
  const int T = cfg.horizon;
  RunTrace trace;
  trace.committed.reserve(static_cast<std::size_t>(T));
  trace.deltas.reserve(static_cast<std::size_t>(T));
  trace.per_stage_cost.reserve(static_cast<std::size_t>(T));
  trace.cumulative_cost.reserve(static_cast<std::size_t>(T));

  DecisionMatrix state(receding ? hp.window : 1, x0);
  double x_prev = x0;
  double delta_prev = 0.0;
  double consumed = 0.0;
  double cum = 0.0;

  for (int t = 1; t <= T; ++t) {
    StepResult step;
    if (!receding) {
      // Nothing has been revealed before the first stage.
      step = t == 1 ? StepResult{project_interval(x0, ramp_set(x_prev, cfg)), 0.0}
                    : step_no_prediction(x_prev, delta_prev,
                                         prices[static_cast<std::size_t>(t - 2)], cfg, hp);
    } else {
      const Forecast fc = predictor->forecast(prices, t, hp.window);
      step = receding_step(state, fc.values, cfg, hp, x_prev, method == Method::Rhag);
    }

    if (opts.hard_finish) {
      const double remaining = cfg.e_total - consumed;
      // Raise to the ceiling when the proposed decision would leave the floor unreachable.
      if (remaining > 0.0 &&
          step.x + max_reachable_energy(step.x, T - t, cfg) < remaining - 1e-12) {
        step.x = ramp_set(x_prev, cfg).hi();
      }
    }

    const double lambda = prices[static_cast<std::size_t>(t - 1)];
    const double loss = stage_loss(lambda, cfg, step.x);
    cum += loss;
    consumed += step.x;
    trace.committed.push_back(step.x);
    trace.deltas.push_back(step.delta);
    trace.per_stage_cost.push_back(loss);
    trace.cumulative_cost.push_back(cum);
    x_prev = step.x;
    delta_prev = step.delta;
  }

  trace.report = feasibility_report(trace.committed, cfg, x0);
  trace.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return trace;
}

double smoothing_min_eigenvalue(double rho, int horizon) {
  return rho * (2.0 - 2.0 * std::cos(std::numbers::pi / (2.0 * horizon + 1.0)));
}

SmoothedSolve minimize_smoothed(const PriceSeries& prices, const ConsumerConfig& cfg, double x0,
                                double rho, std::span<const double> deltas, double gamma,
                                const SmoothedSolveOptions& opts) {
  prices.require_length(cfg.horizon);
  if (!(rho > 0.0)) throw ParameterError("minimize_smoothed: rho must be positive");
  if (static_cast<int>(deltas.size()) != cfg.horizon) {
    throw InputError("minimize_smoothed: multiplier length differs from horizon");
  }
  const int T = cfg.horizon;
  const double step = opts.step > 0.0 ? opts.step : 1.0 / (4.0 * rho);
  const double zeta = opts.zeta > 0.0 ? opts.zeta : smoothing_min_eigenvalue(rho, T);
  const double xi = opts.accelerated ? xi_from(std::min(zeta, 1.0 / step), step) : 0.0;
  const Interval box = cfg.box();

  auto gradient = [&](const std::vector<double>& v, std::vector<double>& g) {
    for (int t = 0; t < T; ++t) {
      const double prev = t == 0 ? x0 : v[static_cast<std::size_t>(t - 1)];
      const bool last = t == T - 1;
      const double next = last ? 0.0 : v[static_cast<std::size_t>(t + 1)];
      g[static_cast<std::size_t>(t)] = grad_h(prices[static_cast<std::size_t>(t)], cfg,
                                              deltas[static_cast<std::size_t>(t)], prev,
                                              v[static_cast<std::size_t>(t)], next, rho, last);
    }
  };
  auto mapping_norm = [&](const std::vector<double>& v, std::vector<double>& g) {
    gradient(v, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double moved = project_interval(v[i] - step * g[i], box);
      worst = std::max(worst, std::abs(v[i] - moved) / step);
    }
    return worst;
  };

  const auto n = static_cast<std::size_t>(T);
  std::vector<double> x(n, project_interval(x0, box));
  std::vector<double> y = x, x_old = x, g(n);

  SmoothedSolve out;
  for (int k = 0; k < opts.max_iter; ++k) {
    if (mapping_norm(x, g) <= opts.tol) {
      out.converged = true;
      out.iterations = k;
      break;
    }
    const std::vector<double>& base = opts.accelerated ? y : x;
    gradient(base, g);
    x_old = x;
    for (std::size_t i = 0; i < n; ++i) x[i] = project_interval(base[i] - step * g[i], box);
    if (opts.accelerated) {
      // Gradient restart: drop the momentum when it points uphill.
      double uphill = 0.0;
      for (std::size_t i = 0; i < n; ++i) uphill += (y[i] - x[i]) * (x[i] - x_old[i]);
      if (opts.restart && uphill > 0.0) {
        y = x;
      } else {
        for (std::size_t i = 0; i < n; ++i) y[i] = (1.0 + xi) * x[i] - xi * x_old[i];
      }
    }
    out.iterations = k + 1;
  }
  out.objective = smoothed_total(prices.values(), cfg, x, deltas, x0, rho, gamma);
  out.x = std::move(x);
  return out;
}

}  // namespace odr
