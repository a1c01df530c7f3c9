#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "swwe/flow.hpp"
#include "swwe/grid.hpp"
#include "swwe/solver.hpp"

namespace swwe {

// P-weighted nodal L2 errors: e_h = sqrt(sum |I_i| (h_i - h(x_i,t))^2), same
// for u. Consistent with the discrete energy norm.
std::pair<double, double> l2_error(const State& state,
                                   const std::function<Vec2(double, double)>& exact,
                                   const Grid& grid, double t);

struct ConvergenceRow {
  int N = 0;
  double h_error = 0.0, u_error = 0.0;
  std::optional<double> h_rate, u_rate;  // log2 ratio vs previous row
};

struct Scenario;

// Run the scenario at each resolution (t_final/alpha/cr from params), compute
// errors against scenario.exact and log2 rates between consecutive rows.
// Resolutions must be >= 2 entries, strictly increasing. Runs fan out over
// threads, capped by SWWE_THREADS (default: hardware concurrency).
std::vector<ConvergenceRow> convergence_table(const Scenario& scenario, const FlowConfig& cfg,
                                              const RunParams& params,
                                              const std::vector<int>& resolutions);

// SWWE_THREADS if set (>=1), else hardware concurrency
int max_threads_from_env();

// sum |v_{i+1} - v_i|
double total_variation(const std::vector<double>& v);
double total_variation(const double* v, int n);

}  // namespace swwe
