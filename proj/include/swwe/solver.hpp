#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "swwe/flow.hpp"
#include "swwe/grid.hpp"
#include "swwe/sat.hpp"

namespace swwe {

// Discrete solution, component-major: data = [h_0..h_N, u_0..u_N].
struct State {
  std::vector<double> data;
  double t = 0.0;

  int nodes() const { return static_cast<int>(data.size()) / 2; }
  double* h() { return data.data(); }
  double* u() { return data.data() + nodes(); }
  const double* h() const { return data.data(); }
  const double* u() const { return data.data() + nodes(); }
};

struct RunParams {
  double cr = 0.25;
  double t_final = 0.0;
  double alpha = 0.0;
  bool record_energy = false;
  int record_interval = 1;
  std::vector<double> snapshot_times;  // sorted; each landed on exactly
};

// Optional forcing F(x, t) -> (F_h, F_u), applied as nodal point values.
using Forcing = std::function<Vec2(double x, double t)>;

// Semi-discrete right-hand side: P^{-1}[ -(M (x) Q) q + alpha (I (x) A) q + SAT ] + F.
// Out has state shape. O(N).
void rhs(const State& state, const SpectralData& sd, const SbpOperators& ops,
         const PenaltySet& pen, const BoundaryData& data, const Forcing& forcing,
         std::vector<double>& out);

std::vector<double> rhs(const State& state, const SpectralData& sd, const SbpOperators& ops,
                        const PenaltySet& pen, const BoundaryData& data,
                        const Forcing& forcing = nullptr);

double cfl_dt(const Grid& grid, const FlowConfig& cfg, double cr);

// Classical RK4 with stage-time evaluation of data/forcing. Throws on
// NaN/Inf in any stage, naming the stage.
using RhsFn = std::function<void(const State&, std::vector<double>& out)>;
void rk4_step(State& state, double dt, const RhsFn& f);

// q^T (W (x) P) q = sum |I_i| (g h_i^2 + H u_i^2)
double discrete_energy(const State& state, const FlowConfig& cfg, const Grid& grid);

struct RunResult {
  State final_state;
  std::vector<std::pair<double, State>> snapshots;     // (t, state)
  std::vector<std::pair<double, double>> energy;       // (t, ||q||^2_WP)
  long steps = 0;
};

struct Scenario;  // scenarios.hpp

// Integrate from t=0 to params.t_final with fixed dt from cfl_dt; partial
// steps land snapshot times and t_final exactly. Safe to call concurrently
// from independent threads.
RunResult run(const Scenario& scenario, const Grid& grid, const FlowConfig& cfg,
              const RunParams& params);

// As above with an explicit penalty override (verify's rejection path uses
// this to push custom gammas/taus through the same machinery).
RunResult run(const Scenario& scenario, const Grid& grid, const FlowConfig& cfg,
              const RunParams& params, const PenaltySet& pen);

}  // namespace swwe
