#include "odr/dr_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "odr/errors.hpp"

namespace odr {

void ConsumerConfig::validate() const {
  auto fail = [](const std::string& what) { throw ParameterError("consumer: " + what); };
  for (double v : {x_min, x_max, e_total, r_up, r_dn, u, interval_hours}) {
    if (!std::isfinite(v)) fail("non-finite parameter");
  }
  if (x_min < 0.0 || x_min > x_max) fail("need 0 <= x_min <= x_max");
  if (!(r_up > 0.0) || !(r_dn > 0.0)) fail("ramp limits must be positive");
  if (horizon < 1) fail("horizon must be at least 1");
  if (!(interval_hours > 0.0)) fail("interval_hours must be positive");
  const double slack = 1e-9 * std::max(1.0, std::abs(e_total));
  if (e_total < horizon * x_min - slack || e_total > horizon * x_max + slack) {
    fail("e_total outside [horizon * x_min, horizon * x_max]");
  }
}

PriceSeries::PriceSeries(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      std::ostringstream os;
      os << "non-finite price at interval " << i;
      throw InputError(os.str());
    }
  }
}

void PriceSeries::require_length(int horizon) const {
  if (static_cast<long>(values_.size()) != horizon) {
    std::ostringstream os;
    os << "price series has " << values_.size() << " intervals, horizon is " << horizon;
    throw InputError(os.str());
  }
}

Utility linear_utility(double u) {
  return {[u](double x) { return u * x; }, [u](double) { return u; }};
}

double stage_loss(double lambda_t, const ConsumerConfig& cfg, double x) {
  return (lambda_t - cfg.u) * x;
}

double stage_loss(double lambda_t, const Utility& utility, double x) {
  return lambda_t * x - utility.value(x);
}

double augmented_loss(double lambda_t, const ConsumerConfig& cfg, double x, double delta,
                      double gamma) {
  return stage_loss(lambda_t, cfg, x) + delta * (cfg.pace() - x) - 0.5 * gamma * delta * delta;
}

double grad_x_F(double lambda_t, const ConsumerConfig& cfg, double delta) {
  return lambda_t - cfg.u - delta;
}

double grad_x_F(double lambda_t, const Utility& utility, const ConsumerConfig&, double x,
                double delta) {
  return lambda_t - utility.marginal(x) - delta;
}

double grad_delta_F(double x, double delta, const ConsumerConfig& cfg, double gamma) {
  return cfg.pace() - x - gamma * delta;
}

double grad_h(double lambda_m, const ConsumerConfig& cfg, double delta, double x_prev,
              double x_cur, double x_next, double rho, bool is_last_stage) {
  const double g = grad_x_F(lambda_m, cfg, delta);
  if (is_last_stage) return g + rho * (x_cur - x_prev);
  return g + rho * (2.0 * x_cur - x_prev - x_next);
}

double smoothed_total(std::span<const double> prices, const ConsumerConfig& cfg,
                      std::span<const double> x, std::span<const double> deltas, double x0,
                      double rho, double gamma) {
  if (prices.size() != x.size() || deltas.size() != x.size()) {
    throw InputError("smoothed_total: length mismatch");
  }
  double total = 0.0;
  double prev = x0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    const double d = x[t] - prev;
    total += augmented_loss(prices[t], cfg, x[t], deltas[t], gamma) + 0.5 * rho * d * d;
    prev = x[t];
  }
  return total;
}

Interval ramp_set(double x_prev, const ConsumerConfig& cfg) {
  const double lo = std::max(cfg.x_min, x_prev - cfg.r_dn);
  const double hi = std::min(cfg.x_max, x_prev + cfg.r_up);
  if (lo > hi) {
    std::ostringstream os;
    os << "ramp set empty around previous decision " << x_prev;
    throw InfeasibleError(os.str());
  }
  return {lo, hi};
}

FeasibilityReport feasibility_report(std::span<const double> traj, const ConsumerConfig& cfg,
                                     double x0, double tol) {
  if (static_cast<long>(traj.size()) != cfg.horizon) {
    throw InputError("feasibility_report: trajectory length differs from horizon");
  }
  FeasibilityReport rep;
  double prev = x0;
  double sum = 0.0;
  for (double x : traj) {
    if (x < cfg.x_min - tol || x > cfg.x_max + tol) ++rep.box_violations;
    if (x - prev > cfg.r_up + tol || prev - x > cfg.r_dn + tol) ++rep.ramp_violations;
    sum += x;
    prev = x;
  }
  rep.long_term_shortfall = std::max(0.0, cfg.e_total - sum);
  rep.feasible =
      rep.box_violations == 0 && rep.ramp_violations == 0 && rep.long_term_shortfall <= tol;
  return rep;
}

double total_cost(std::span<const double> traj, const PriceSeries& prices,
                  const ConsumerConfig& cfg) {
  if (traj.size() != prices.size()) throw InputError("total_cost: length mismatch");
  double c = 0.0;
  for (std::size_t t = 0; t < traj.size(); ++t) c += stage_loss(prices[t], cfg, traj[t]);
  return c;
}

double max_reachable_energy(double x_prev, int stages, const ConsumerConfig& cfg) {
  double sum = 0.0;
  double x = x_prev;
  for (int k = 0; k < stages; ++k) {
    x = std::min(cfg.x_max, x + cfg.r_up);
    sum += x;
  }
  return sum;
}

}  // namespace odr
