#pragma once

#include <span>
#include <vector>

#include "odr/algorithms.hpp"
#include "odr/dr_model.hpp"
#include "odr/predictors.hpp"

namespace odr {

/// Uniform discretization of [x_min, x_max] with both endpoints.
class Grid {
 public:
  Grid(const ConsumerConfig& cfg, int n_levels);

  int size() const noexcept { return static_cast<int>(levels_.size()); }
  double step() const noexcept { return step_; }
  double level(int j) const { return levels_[static_cast<std::size_t>(j)]; }
  std::span<const double> levels() const noexcept { return levels_; }

 private:
  std::vector<double> levels_;
  double step_;
};

/// Stage-by-level cost table, row-major.
class CostTable {
 public:
  CostTable(int stages, int levels) : stages_(stages), levels_(levels),
      data_(static_cast<std::size_t>(stages) * static_cast<std::size_t>(levels), 0.0) {}

  int stages() const noexcept { return stages_; }
  int levels() const noexcept { return levels_; }
  double& at(int t, int j) { return data_[index(t, j)]; }
  double at(int t, int j) const { return data_[index(t, j)]; }

  /// (lambda_t - u) * level for every stage and level.
  static CostTable linear(std::span<const double> prices, double u, const Grid& grid);

 private:
  std::size_t index(int t, int j) const {
    return static_cast<std::size_t>(t) * static_cast<std::size_t>(levels_) +
           static_cast<std::size_t>(j);
  }
  int stages_;
  int levels_;
  std::vector<double> data_;
};

struct DpResult {
  double value = 0.0;
  std::vector<int> level_index;
  Trajectory x;
};

/// Exact minimum of sum_t cost(t, j_t) over grid trajectories obeying the ramp
/// limits (first stage measured from x0) via forward recursion with sliding-window
/// minima. Ties go to the lower level. Throws InfeasibleError when no grid
/// trajectory is ramp-feasible.
DpResult dp_ramp_chain(const CostTable& costs, const ConsumerConfig& cfg, const Grid& grid,
                       double x0);

struct OfflineSolution {
  double cost = 0.0;
  Trajectory x;
  double delta_star = 0.0;
  /// cost minus the best Lagrangian lower bound; the grid optimum lies in [cost - repair_gap, cost].
  double repair_gap = 0.0;
  /// grid_step * sum |lambda_t - u|: discretization allowance towards the continuous optimum.
  double grid_bound = 0.0;
};

/// Exhaustive search over all grid trajectories with every constraint, including
/// sum x >= E_T. Guarded to n_levels^T <= 1e7.
OfflineSolution solve_offline_bruteforce(const ConsumerConfig& cfg, const PriceSeries& prices,
                                         const Grid& grid, double x0);

/// Minimizes sum_t costs(t, j_t) subject to ramp limits and sum x >= requirement by
/// bisection on the multiplier of the energy floor and greedy primal repair.
/// With cap_to_reachable an unreachable floor yields the most energetic plan
/// instead of an InfeasibleError.
OfflineSolution solve_energy_floor(const CostTable& costs, double requirement,
                                   const ConsumerConfig& cfg, const Grid& grid, double x0,
                                   double delta_tol, double delta_hint = -1.0,
                                   bool cap_to_reachable = false);

/// Hindsight optimum of the demand-response instance on the grid.
OfflineSolution solve_offline_lagrangian(const ConsumerConfig& cfg, const PriceSeries& prices,
                                         const Grid& grid, double x0, double tol = 1e-6);

struct RobustSpec {
  double gamma_frac = 0.3;  // budget of uncertainty as a fraction of the remaining horizon
  double dev_frac = 0.1;    // deviation half-width relative to the nominal price

  void validate() const;
};

struct RobustSolution {
  Trajectory x;
  double objective = 0.0;  // nominal cost plus the worst-case protection
  double z = 0.0;
  double delta_star = 0.0;
  int budget = 0;
};

/// Budget-of-uncertainty problem over nominal.size() remaining stages starting after a
/// decision of x_prev with energy floor `requirement`. The protection level z is
/// found by golden-section search over [0, z_max], or locally around z_hint when
/// one is given (z_hint >= 0).
RobustSolution robust_inner(const ConsumerConfig& cfg, std::span<const double> nominal,
                            const RobustSpec& spec, const Grid& grid, double x_prev,
                            double requirement, double tol = 1e-6,
                            bool cap_to_reachable = false, double z_hint = -1.0);

/// Worst-case objective of a fixed trajectory: nominal cost plus the `budget` largest
/// deviations dev_frac * nominal_t * x_t.
double robust_objective(const ConsumerConfig& cfg, std::span<const double> nominal,
                        double dev_frac, int budget, std::span<const double> x);

/// Re-solves the robust problem for the remaining horizon at every stage and commits
/// its first decision.
RunTrace run_rolling_robust(const ConsumerConfig& cfg, const PriceSeries& prices,
                            const Predictor& predictor, const RobustSpec& spec, const Grid& grid,
                            double x0);

}  // namespace odr
