#include "odr/predictors.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "odr/errors.hpp"

namespace odr {
namespace {

int forecast_length(int t, int window, int horizon) {
  if (t < 1 || t > horizon) {
    std::ostringstream os;
    os << "forecast origin " << t << " outside 1.." << horizon;
    throw InputError(os.str());
  }
  if (window < 0) throw ParameterError("forecast window must be non-negative");
  return std::min(window, horizon - t + 1);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double standard_normal(std::uint64_t seed, int t, int k) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(t));
  h = splitmix64(h ^ static_cast<std::uint64_t>(k));
  std::mt19937_64 gen(h);
  std::normal_distribution<double> nd(0.0, 1.0);
  return nd(gen);
}

Forecast persistence(double last, int t, int len) {
  return {std::vector<double>(static_cast<std::size_t>(len), last), t, true};
}

}  // namespace

Forecast perfect_forecast(const PriceSeries& prices, int t, int window) {
  const int len = forecast_length(t, window, static_cast<int>(prices.size()));
  Forecast f{{}, t, false};
  f.values.reserve(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) f.values.push_back(prices[static_cast<std::size_t>(t - 1 + k)]);
  return f;
}

Forecast noisy_forecast(const PriceSeries& prices, int t, int window, double sigma_rel,
                        std::uint64_t seed) {
  if (sigma_rel < 0.0) throw ParameterError("noisy_forecast: sigma_rel must be non-negative");
  Forecast f = perfect_forecast(prices, t, window);
  if (sigma_rel == 0.0) return f;
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    f.values[k] *= 1.0 + sigma_rel * standard_normal(seed, t, static_cast<int>(k));
  }
  return f;
}

Forecast ar_forecast(std::span<const double> history, int order, int t, int window, int horizon) {
  if (order < 1) throw ParameterError("ar_forecast: lag order must be at least 1");
  if (history.size() < static_cast<std::size_t>(order) + 10) {
    std::ostringstream os;
    os << "ar_forecast: need at least " << order + 10 << " samples, got " << history.size();
    throw InputError(os.str());
  }
  const int len = forecast_length(t, window, horizon);
  const int n = static_cast<int>(history.size());
  const int rows = n - order;

  Eigen::MatrixXd design(rows, order + 1);
  Eigen::VectorXd target(rows);
  for (int i = 0; i < rows; ++i) {
    const int row_t = order + i;  // predicted sample index
    design(i, 0) = 1.0;
    for (int lag = 1; lag <= order; ++lag) design(i, lag) = history[row_t - lag];
    target(i) = history[row_t];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < order + 1) return persistence(history.back(), t, len);
  const Eigen::VectorXd coef = qr.solve(target);
  if (!coef.allFinite()) return persistence(history.back(), t, len);

  std::vector<double> window_vals(history.end() - order, history.end());
  Forecast f{{}, t, false};
  f.values.reserve(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) {
    double next = coef(0);
    for (int lag = 1; lag <= order; ++lag) {
      next += coef(lag) * window_vals[window_vals.size() - static_cast<std::size_t>(lag)];
    }
    f.values.push_back(next);
    window_vals.push_back(next);
  }
  return f;
}

Forecast PerfectPredictor::forecast(const PriceSeries& truth, int t, int window) const {
  return perfect_forecast(truth, t, window);
}

NoisyPredictor::NoisyPredictor(double sigma_rel, std::uint64_t seed)
    : sigma_rel_(sigma_rel), seed_(seed) {
  if (sigma_rel < 0.0) throw ParameterError("noisy predictor: sigma_rel must be non-negative");
}

Forecast NoisyPredictor::forecast(const PriceSeries& truth, int t, int window) const {
  return noisy_forecast(truth, t, window, sigma_rel_, seed_);
}

ArPredictor::ArPredictor(int order, int fit_window, std::vector<double> prior)
    : order_(order), fit_window_(fit_window), prior_(std::move(prior)) {
  if (order < 1) throw ParameterError("ar predictor: order must be at least 1");
  if (fit_window < order + 10) throw ParameterError("ar predictor: fit window too short for order");
}

Forecast ArPredictor::forecast(const PriceSeries& truth, int t, int window) const {
  const int horizon = static_cast<int>(truth.size());
  // Only prices revealed before stage t are visible.
  std::vector<double> history(prior_);
  const auto revealed = truth.values().first(static_cast<std::size_t>(std::max(0, t - 1)));
  history.insert(history.end(), revealed.begin(), revealed.end());
  if (history.size() > static_cast<std::size_t>(fit_window_)) {
    history.erase(history.begin(), history.end() - fit_window_);
  }
  if (history.size() < static_cast<std::size_t>(order_) + 10) {
    if (history.empty()) throw InputError("ar predictor: no price history before first stage");
    return persistence(history.back(), t, forecast_length(t, window, horizon));
  }
  return ar_forecast(history, order_, t, window, horizon);
}

}  // namespace odr
