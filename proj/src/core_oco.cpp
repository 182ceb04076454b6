#include "odr/core_oco.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "odr/errors.hpp"

namespace odr {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    std::ostringstream os;
    os << "invalid interval [" << lo << ", " << hi << "]";
    throw ParameterError(os.str());
  }
}

double project_interval(double v, const Interval& bounds) noexcept {
  return std::min(std::max(v, bounds.lo()), bounds.hi());
}

double check_gradient(const ScalarFn& f, double analytic_grad, double point, double eps) {
  if (!(eps > 0.0)) throw ParameterError("check_gradient: eps must be positive");
  const double fp = f(point + eps);
  const double fm = f(point - eps);
  if (!std::isfinite(fp) || !std::isfinite(fm)) {
    throw NumericError("check_gradient: function not finite near the evaluation point");
  }
  const double fd = (fp - fm) / (2.0 * eps);
  return std::abs(analytic_grad - fd) / std::max(1.0, std::abs(analytic_grad));
}

double xi_from(double zeta, double eta2) {
  if (zeta < 0.0 || !(eta2 > 0.0)) throw ParameterError("xi_from: need zeta >= 0 and eta2 > 0");
  const double prod = zeta * eta2;
  if (prod > 1.0) throw ParameterError("xi_from: zeta * eta2 must not exceed 1");
  const double s = std::sqrt(prod);
  return (1.0 - s) / (1.0 + s);
}

}  // namespace odr
