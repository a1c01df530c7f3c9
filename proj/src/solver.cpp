#include "swwe/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swwe/scenarios.hpp"

namespace swwe {

void rhs(const State& state, const SpectralData& sd, const SbpOperators& ops,
         const PenaltySet& pen, const BoundaryData& data, const Forcing& forcing,
         std::vector<double>& out) {
  const int n = state.nodes();
  if (n != ops.grid.nodes() || static_cast<int>(state.data.size()) != 2 * n)
    throw std::invalid_argument("rhs: state/operator shape mismatch");
  out.resize(2 * n);

  const double g = sd.cfg.g, H = sd.cfg.H, U = sd.cfg.U;
  const double* h = state.h();
  const double* u = state.u();
  double* oh = out.data();
  double* ou = out.data() + n;

  // -(M (x) Q) q + alpha (I (x) A) q, stencils fused into one pass
  const double a = ops.alpha;
  auto row = [&](int i, double qh, double qu, double ah, double au) {
    oh[i] = -(U * qh + H * qu) + a * ah;
    ou[i] = -(g * qh + U * qu) + a * au;
  };
  row(0, 0.5 * (h[1] - h[0]), 0.5 * (u[1] - u[0]), h[1] - h[0], u[1] - u[0]);
  for (int i = 1; i < n - 1; ++i)
    row(i, 0.5 * (h[i + 1] - h[i - 1]), 0.5 * (u[i + 1] - u[i - 1]),
        h[i - 1] - 2.0 * h[i] + h[i + 1], u[i - 1] - 2.0 * u[i] + u[i + 1]);
  row(n - 1, 0.5 * (h[n - 1] - h[n - 2]), 0.5 * (u[n - 1] - u[n - 2]),
      h[n - 2] - h[n - 1], u[n - 2] - u[n - 1]);

  const SatValues sat = assemble_sat({h[0], u[0]}, {h[n - 1], u[n - 1]}, state.t, sd, pen, data);
  oh[0] += sat.h0;
  ou[0] += sat.u0;
  oh[n - 1] += sat.hN;
  ou[n - 1] += sat.uN;

  const std::vector<double>& vol = ops.grid.vol;
  for (int i = 0; i < n; ++i) {
    oh[i] /= vol[i];
    ou[i] /= vol[i];
  }

  if (forcing) {
    const std::vector<double>& x = ops.grid.x;
    for (int i = 0; i < n; ++i) {
      const Vec2 F = forcing(x[i], state.t);
      oh[i] += F.x1;
      ou[i] += F.x2;
    }
  }
}

std::vector<double> rhs(const State& state, const SpectralData& sd, const SbpOperators& ops,
                        const PenaltySet& pen, const BoundaryData& data, const Forcing& forcing) {
  std::vector<double> out;
  rhs(state, sd, ops, pen, data, forcing, out);
  return out;
}

double cfl_dt(const Grid& grid, const FlowConfig& cfg, double cr) {
  if (!(cr > 0.0 && cr <= 1.0)) throw std::invalid_argument("cfl_dt: need cr in (0, 1]");
  return cr * grid.min_width() / cfg.wave_speed();
}

static bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

void rk4_step(State& state, double dt, const RhsFn& f) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: need dt > 0");
  const size_t m = state.data.size();
  const double t0 = state.t;

  std::vector<double> k1(m), k2(m), k3(m), k4(m);
  State stage;
  stage.data.resize(m);

  f(state, k1);
  stage.t = t0 + 0.5 * dt;
  for (size_t i = 0; i < m; ++i) stage.data[i] = state.data[i] + 0.5 * dt * k1[i];
  f(stage, k2);
  for (size_t i = 0; i < m; ++i) stage.data[i] = state.data[i] + 0.5 * dt * k2[i];
  f(stage, k3);
  stage.t = t0 + dt;
  for (size_t i = 0; i < m; ++i) stage.data[i] = state.data[i] + dt * k3[i];
  f(stage, k4);

  const std::vector<double>* ks[4] = {&k1, &k2, &k3, &k4};
  for (int s = 0; s < 4; ++s)
    if (!all_finite(*ks[s]))
      throw std::runtime_error("rk4_step: divergence (non-finite values) in stage " +
                               std::to_string(s + 1));

  for (size_t i = 0; i < m; ++i)
    state.data[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  state.t = t0 + dt;
}

double discrete_energy(const State& state, const FlowConfig& cfg, const Grid& grid) {
  const int n = state.nodes();
  if (n != grid.nodes()) throw std::invalid_argument("discrete_energy: shape mismatch");
  const double* h = state.h();
  const double* u = state.u();
  double e = 0.0;
  for (int i = 0; i < n; ++i) e += grid.vol[i] * (cfg.g * h[i] * h[i] + cfg.H * u[i] * u[i]);
  return e;
}

static RunResult run_impl(const Scenario& scenario, const Grid& grid, const FlowConfig& cfg,
                          const RunParams& params, const PenaltySet& pen) {
  if (!(params.t_final >= 0.0)) throw std::invalid_argument("run: need t_final >= 0");
  const SpectralData sd = spectral_data(cfg);
  const SbpOperators ops = build_operators(grid, params.alpha);
  const BoundaryData data = boundary_data_for(scenario, cfg);

  const int n = grid.nodes();
  State state;
  state.data.resize(2 * n);
  state.t = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2 q = scenario.initial ? scenario.initial(grid.x[i]) : Vec2{};
    state.data[i] = q.x1;
    state.data[n + i] = q.x2;
  }

  RunResult res;
  auto record_snapshot = [&](double t) { res.snapshots.emplace_back(t, state); };
  auto record_energy = [&](double t) {
    if (params.record_energy) res.energy.emplace_back(t, discrete_energy(state, cfg, grid));
  };

  // event times we must land on exactly: requested snapshots, then t_final
  std::vector<double> events = params.snapshot_times;
  std::sort(events.begin(), events.end());
  events.erase(std::remove_if(events.begin(), events.end(),
                              [&](double t) { return t < 0.0 || t > params.t_final; }),
               events.end());

  const RhsFn f = [&](const State& s, std::vector<double>& out) {
    rhs(s, sd, ops, pen, data, scenario.forcing, out);
  };

  const double dt0 = cfl_dt(grid, cfg, params.cr);
  const double eps = 1e-12 * std::max(1.0, params.t_final);
  size_t next_event = 0;
  record_energy(0.0);
  while (next_event < events.size() && events[next_event] <= eps) {
    record_snapshot(0.0);
    ++next_event;
  }

  while (state.t < params.t_final - eps) {
    double dt = std::min(dt0, params.t_final - state.t);
    if (next_event < events.size()) dt = std::min(dt, events[next_event] - state.t);
    try {
      rk4_step(state, dt, f);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(std::string(e.what()) + " at step " + std::to_string(res.steps) +
                               ", t = " + std::to_string(state.t));
    }
    ++res.steps;
    if (params.record_energy && res.steps % std::max(1, params.record_interval) == 0)
      record_energy(state.t);
    while (next_event < events.size() && state.t >= events[next_event] - eps) {
      record_snapshot(events[next_event]);
      ++next_event;
    }
  }
  if (params.record_energy &&
      (res.energy.empty() || res.energy.back().first != state.t))
    record_energy(state.t);

  res.final_state = std::move(state);
  return res;
}

RunResult run(const Scenario& scenario, const Grid& grid, const FlowConfig& cfg,
              const RunParams& params) {
  const Regime regime = classify_regime(cfg);
  std::optional<ReflectionCoefficients> gam;
  if (regime.sub()) gam = reflection_coefficients(cfg);
  return run_impl(scenario, grid, cfg, params, default_penalties(spectral_data(cfg), regime, gam));
}

RunResult run(const Scenario& scenario, const Grid& grid, const FlowConfig& cfg,
              const RunParams& params, const PenaltySet& pen) {
  return run_impl(scenario, grid, cfg, params, pen);
}

}  // namespace swwe
