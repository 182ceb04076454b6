#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "odr/core_oco.hpp"

namespace odr {

/// Single aggregate consumer. Energies are MWh per interval, prices $/MWh.
/// Ramp limits are stored per interval; see `from_ramp_rate` for the MW/h form.
struct ConsumerConfig {
  double x_min = 0.041;
  double x_max = 0.834;
  double e_total = 60.0;
  double r_up = 2.0 / 12.0;
  double r_dn = 2.0 / 12.0;
  double u = 69.6;
  int horizon = 288;
  double interval_hours = 1.0 / 12.0;

  /// Throws ParameterError when an invariant does not hold.
  void validate() const;

  double pace() const noexcept { return e_total / horizon; }
  Interval box() const { return {x_min, x_max}; }

  /// Per-interval ramp limit from a rate in MW/h.
  static double ramp_per_interval(double rate_mw_per_h, double interval_hours) {
    return rate_mw_per_h * interval_hours;
  }
};

/// Ordered per-interval prices. All values finite.
class PriceSeries {
 public:
  PriceSeries() = default;
  explicit PriceSeries(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  /// Throws InputError unless size() == horizon.
  void require_length(int horizon) const;

 private:
  std::vector<double> values_;
};

using Trajectory = std::vector<double>;

struct FeasibilityReport {
  int box_violations = 0;
  int ramp_violations = 0;
  double long_term_shortfall = 0.0;
  bool feasible = true;
};

/// Concave differentiable utility U(x) with marginal U'(x).
struct Utility {
  std::function<double(double)> value;
  std::function<double(double)> marginal;
};

Utility linear_utility(double u);

// Stage quantities. Index conventions: stages are 1..T in the formulas,
// containers are 0-based.

double stage_loss(double lambda_t, const ConsumerConfig& cfg, double x);
double stage_loss(double lambda_t, const Utility& utility, double x);

/// F_t = f_t(x) + delta (E_T/T - x) - gamma delta^2 / 2
double augmented_loss(double lambda_t, const ConsumerConfig& cfg, double x, double delta,
                      double gamma);

double grad_x_F(double lambda_t, const ConsumerConfig& cfg, double delta);
double grad_x_F(double lambda_t, const Utility& utility, const ConsumerConfig& cfg, double x,
                double delta);
double grad_delta_F(double x, double delta, const ConsumerConfig& cfg, double gamma);

/// Gradient of the ramp-smoothed total loss with respect to one stage's decision.
/// On the final stage x_next is ignored.
double grad_h(double lambda_m, const ConsumerConfig& cfg, double delta, double x_prev,
              double x_cur, double x_next, double rho, bool is_last_stage);

/// Sum over t of F_t(x_t, delta_t) + rho/2 (x_t - x_{t-1})^2 with x_0 = x0.
double smoothed_total(std::span<const double> prices, const ConsumerConfig& cfg,
                      std::span<const double> x, std::span<const double> deltas, double x0,
                      double rho, double gamma);

/// Box intersected with the ramp window around the previous decision.
/// Throws InfeasibleError when the intersection is empty.
Interval ramp_set(double x_prev, const ConsumerConfig& cfg);

FeasibilityReport feasibility_report(std::span<const double> traj, const ConsumerConfig& cfg,
                                     double x0, double tol = 1e-9);

double total_cost(std::span<const double> traj, const PriceSeries& prices,
                  const ConsumerConfig& cfg);

/// Largest total energy any ramp-feasible trajectory over `stages` stages can reach
/// starting after a decision of x_prev.
double max_reachable_energy(double x_prev, int stages, const ConsumerConfig& cfg);

}  // namespace odr
