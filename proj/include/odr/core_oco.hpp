#pragma once

#include <functional>
#include <limits>

namespace odr {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval [lo, hi]; hi may be +inf to represent a half-line.
class Interval {
 public:
  Interval(double lo, double hi);

  static Interval nonnegative() { return {0.0, kInf}; }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool contains(double v) const noexcept { return v >= lo_ && v <= hi_; }

 private:
  double lo_;
  double hi_;
};

/// Euclidean projection of a scalar onto a closed interval.
double project_interval(double v, const Interval& bounds) noexcept;

using ScalarFn = std::function<double(double)>;

/// Relative error |g - fd| / max(1, |g|) of an analytic derivative against a
/// central difference with half-width eps. Throws NumericError when the
/// function is not finite at point +- eps.
double check_gradient(const ScalarFn& f, double analytic_grad, double point, double eps);

/// Momentum coefficient (1 - sqrt(zeta*eta2)) / (1 + sqrt(zeta*eta2)).
double xi_from(double zeta, double eta2);

}  // namespace odr
