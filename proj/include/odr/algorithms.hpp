#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "odr/dr_model.hpp"
#include "odr/predictors.hpp"

namespace odr {

enum class Method { NoPrediction, Rhgd, Rhag };

std::string to_string(Method m);
/// Accepts "no_prediction", "rhgd", "rhag".
Method method_from_string(const std::string& name);

/// Step sizes and regularizers of the online methods.
struct HyperParams {
  double eta = 0.26;   // primal step, no-prediction
  double mu = 10.0;    // dual step, no-prediction
  double eta1 = 0.05;  // tail initialization, receding horizon
  double mu1 = 5.0;
  double eta2 = 0.05;  // backward updates
  double mu2 = 5.0;
  double gamma = 0.1;  // dual regularizer
  double rho = 10.0;   // ramp smoothing weight
  double zeta = 10.0;  // strong convexity estimate for the momentum coefficient
  int window = 6;

  void validate() const;
  double xi() const;
};

struct StepResult {
  double x = 0.0;
  double delta = 0.0;
};

/// One primal-dual step using only the previous stage's revealed price.
StepResult step_no_prediction(double x_prev, double delta_prev, double lambda_prev,
                              const ConsumerConfig& cfg, const HyperParams& hp);

/// Provisional decisions x^s_m, multipliers delta^s_m and momentum points y^s_m of
/// the last three update rounds s. Round s holds stages m = s .. s + W.
/// Rounds s <= 0 are pre-history and hold x0 with zero multipliers.
class DecisionMatrix {
 public:
  DecisionMatrix(int window, double x0);

  int window() const noexcept { return window_; }
  /// Most recently completed round (0 before the first step).
  int round() const noexcept { return cols_[2].round; }

  double x(int round, int m) const { return column(round).x[offset(round, m)]; }
  double y(int round, int m) const { return column(round).y[offset(round, m)]; }
  double delta(int round, int m) const { return column(round).delta[offset(round, m)]; }

 private:
  struct Column {
    int round = 0;
    std::vector<double> x, y, delta;
  };

  const Column& column(int round) const;
  std::size_t offset(int round, int m) const;
  void push(Column col);

  int window_;
  std::array<Column, 3> cols_;  // oldest first

  friend StepResult receding_step(DecisionMatrix&, std::span<const double>,
                                  const ConsumerConfig&, const HyperParams&, double, bool);
};

/// Round t = state.round() + 1 of the receding-horizon method. `forecast` holds
/// predicted prices for stages t .. t + min(W, T - t + 1) - 1. The returned decision
/// is projected onto the ramp set around `x_committed_prev`.
StepResult receding_step(DecisionMatrix& state, std::span<const double> forecast,
                         const ConsumerConfig& cfg, const HyperParams& hp,
                         double x_committed_prev, bool accelerated);

inline StepResult rhgd_step(DecisionMatrix& state, std::span<const double> forecast,
                            const ConsumerConfig& cfg, const HyperParams& hp,
                            double x_committed_prev) {
  return receding_step(state, forecast, cfg, hp, x_committed_prev, false);
}

inline StepResult rhag_step(DecisionMatrix& state, std::span<const double> forecast,
                            const ConsumerConfig& cfg, const HyperParams& hp,
                            double x_committed_prev) {
  return receding_step(state, forecast, cfg, hp, x_committed_prev, true);
}

struct RunTrace {
  Trajectory committed;
  std::vector<double> deltas;
  std::vector<double> per_stage_cost;
  std::vector<double> cumulative_cost;
  FeasibilityReport report;
  double wall_time = 0.0;  // seconds

  double cost() const { return cumulative_cost.empty() ? 0.0 : cumulative_cost.back(); }
  double profit() const { return -cost(); }
};

struct RunOptions {
  /// Commit the ramp ceiling once the remaining requirement can only just be met.
  bool hard_finish = false;
};

/// On-pace start clamped to the box.
double default_x0(const ConsumerConfig& cfg);

/// Drives one method over the whole horizon: commit x_t, reveal lambda_t, record the loss.
RunTrace run_online(Method method, const PriceSeries& prices, const Predictor* predictor,
                    const ConsumerConfig& cfg, const HyperParams& hp, double x0,
                    const RunOptions& opts = {});

/// Projected (accelerated) gradient on the ramp-smoothed total loss with fixed
/// multipliers, used to compare plain and momentum iterations offline.
struct SmoothedSolve {
  Trajectory x;
  int iterations = 0;
  bool converged = false;
  double objective = 0.0;
};

struct SmoothedSolveOptions {
  bool accelerated = false;
  double tol = 1e-6;      // sup-norm of the gradient mapping
  int max_iter = 2'000'000;
  double step = 0.0;      // 0 selects 1 / (4 rho)
  double zeta = 0.0;      // 0 selects the smallest Hessian eigenvalue
  bool restart = true;    // adaptive momentum restart for the accelerated iteration
};

SmoothedSolve minimize_smoothed(const PriceSeries& prices, const ConsumerConfig& cfg, double x0,
                                double rho, std::span<const double> deltas, double gamma,
                                const SmoothedSolveOptions& opts);

/// Smallest eigenvalue of the Hessian of the smoothing term rho/2 sum (x_t - x_{t-1})^2
/// with x_0 fixed.
double smoothing_min_eigenvalue(double rho, int horizon);

}  // namespace odr
