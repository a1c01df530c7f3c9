#include "swwe/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "swwe/scenarios.hpp"

namespace swwe {

std::pair<double, double> l2_error(const State& state,
                                   const std::function<Vec2(double, double)>& exact,
                                   const Grid& grid, double t) {
  const int n = state.nodes();
  if (n != grid.nodes()) throw std::invalid_argument("l2_error: shape mismatch");
  if (!exact) throw std::invalid_argument("l2_error: exact solution required");
  const double* h = state.h();
  const double* u = state.u();
  double eh = 0.0, eu = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2 q = exact(grid.x[i], t);
    const double dh = h[i] - q.x1;
    const double du = u[i] - q.x2;
    eh += grid.vol[i] * dh * dh;
    eu += grid.vol[i] * du * du;
  }
  return {std::sqrt(eh), std::sqrt(eu)};
}

int max_threads_from_env() {
  if (const char* env = std::getenv("SWWE_THREADS")) {
    const int k = std::atoi(env);
    if (k >= 1) return k;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<ConvergenceRow> convergence_table(const Scenario& scenario, const FlowConfig& cfg,
                                              const RunParams& params,
                                              const std::vector<int>& resolutions) {
  if (resolutions.size() < 2)
    throw std::invalid_argument("convergence_table: need at least 2 resolutions");
  for (size_t i = 1; i < resolutions.size(); ++i)
    if (resolutions[i] <= resolutions[i - 1])
      throw std::invalid_argument("convergence_table: resolutions must be strictly increasing");
  if (!scenario.exact) throw std::invalid_argument("convergence_table: scenario has no exact solution");

  const int m = static_cast<int>(resolutions.size());
  std::vector<ConvergenceRow> rows(m);
  std::vector<std::exception_ptr> errors(m);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next.fetch_add(1); i < m; i = next.fetch_add(1)) {
      try {
        const Grid grid = build_grid(resolutions[i], scenario.L);
        const RunResult res = run(scenario, grid, cfg, params);
        const auto [eh, eu] = l2_error(res.final_state, scenario.exact, grid, params.t_final);
        rows[i] = {resolutions[i], eh, eu, std::nullopt, std::nullopt};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const int nthreads = std::min(m, max_threads_from_env());
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (int i = 0; i < m; ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::exception& e) {
        throw std::runtime_error("convergence_table: N=" + std::to_string(resolutions[i]) +
                                 " failed: " + e.what());
      }
    }
  }

  const double tiny = 1e-14;
  for (int i = 1; i < m; ++i) {
    // rates only meaningful for doubling and nonvanishing errors
    if (rows[i].h_error > tiny && rows[i - 1].h_error > tiny)
      rows[i].h_rate = std::log2(rows[i - 1].h_error / rows[i].h_error);
    if (rows[i].u_error > tiny && rows[i - 1].u_error > tiny)
      rows[i].u_rate = std::log2(rows[i - 1].u_error / rows[i].u_error);
  }
  return rows;
}

double total_variation(const double* v, int n) {
  if (n < 1) throw std::invalid_argument("total_variation: need length >= 1");
  double tv = 0.0;
  for (int i = 0; i + 1 < n; ++i) tv += std::abs(v[i + 1] - v[i]);
  return tv;
}

double total_variation(const std::vector<double>& v) {
  return total_variation(v.data(), static_cast<int>(v.size()));
}

}  // namespace swwe
