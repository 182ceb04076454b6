#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "odr/dr_model.hpp"

namespace odr {

/// Predicted prices for stages origin .. origin + values.size() - 1 (1-based).
struct Forecast {
  std::vector<double> values;
  int origin = 1;
  bool fallback = false;  // AR fit failed and persistence was used
};

Forecast perfect_forecast(const PriceSeries& prices, int t, int window);

/// Multiplicative Gaussian error: value_k = truth_{t+k} * (1 + eps_k), eps_k ~ N(0, sigma_rel^2),
/// each draw seeded from (seed, t, k) alone.
Forecast noisy_forecast(const PriceSeries& prices, int t, int window, double sigma_rel,
                        std::uint64_t seed);

/// Least-squares AR(order) with intercept fitted on `history`, rolled forward
/// min(window, horizon - t + 1) steps. Requires history.size() >= order + 10.
Forecast ar_forecast(std::span<const double> history, int order, int t, int window, int horizon);

/// Source of look-ahead prices for the online methods. Implementations may read
/// `truth` only where their information model allows it: the AR predictor only
/// touches stages before t.
class Predictor {
 public:
  virtual ~Predictor() = default;
  virtual Forecast forecast(const PriceSeries& truth, int t, int window) const = 0;
  virtual std::string name() const = 0;
};

class PerfectPredictor final : public Predictor {
 public:
  Forecast forecast(const PriceSeries& truth, int t, int window) const override;
  std::string name() const override { return "perfect"; }
};

class NoisyPredictor final : public Predictor {
 public:
  NoisyPredictor(double sigma_rel, std::uint64_t seed);
  Forecast forecast(const PriceSeries& truth, int t, int window) const override;
  std::string name() const override { return "noisy"; }

 private:
  double sigma_rel_;
  std::uint64_t seed_;
};

class ArPredictor final : public Predictor {
 public:
  /// `prior` is price history observed before the first stage (e.g. the previous day).
  ArPredictor(int order, int fit_window, std::vector<double> prior);
  Forecast forecast(const PriceSeries& truth, int t, int window) const override;
  std::string name() const override { return "ar"; }

 private:
  int order_;
  int fit_window_;
  std::vector<double> prior_;
};

}  // namespace odr
