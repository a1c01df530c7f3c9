// Command-line front end: simulate | converge | verify.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swwe/analysis.hpp"
#include "swwe/flow.hpp"
#include "swwe/grid.hpp"
#include "swwe/sat.hpp"
#include "swwe/scenarios.hpp"
#include "swwe/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace swwe;

static const char* kVersion = "1.0.0";

static std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CliConfig {
  double g = 9.8;
  double H = 1.0;
  std::string regime = "sub";
  double u_multiple = std::nan("");   // U = u_multiple * sqrt(gH)
  int n = 2048;
  double alpha = 0.0;
  double alpha_scaled = std::nan("");  // alpha = alpha_scaled * (|U| + sqrt(gH))
  double cr = 0.25;
  double t_final = 3.02;
  std::string scenario = "smooth-pulse";
  std::string out_dir = ".";
  std::vector<double> snapshots;
  std::vector<int> resolutions = {64, 128, 256, 512, 1024, 2048};
  double gamma0_override = std::nan("");
  double gamma1_override = std::nan("");

  FlowConfig flow() const {
    double mult = u_multiple;
    if (std::isnan(mult)) {
      if (regime == "sub") mult = 0.5;
      else if (regime == "critical") mult = 1.0;
      else if (regime == "super") mult = 2.0;
      else throw CLI::ValidationError("--regime", "must be one of sub|critical|super");
    }
    FlowConfig cfg{g, H, mult * std::sqrt(g * H)};
    cfg.validate();
    return cfg;
  }

  double effective_alpha(const FlowConfig& cfg) const {
    if (!std::isnan(alpha_scaled)) return alpha_scaled * cfg.wave_speed();
    return alpha;
  }

  Scenario make_scenario(const FlowConfig& cfg) const {
    if (scenario == "smooth-pulse") return smooth_pulse_scenario(cfg);
    if (scenario == "step-pulse") return step_pulse_scenario(cfg);
    if (scenario == "mms") return mms_scenario(cfg);
    if (scenario == "zero-random" || scenario == "zero") return zero_scenario(cfg);
    throw CLI::ValidationError("--scenario", "unknown scenario: " + scenario);
  }
};

static json regime_report(const FlowConfig& cfg) {
  const Regime regime = classify_regime(cfg);
  const SpectralData sd = spectral_data(cfg);
  json rep;
  rep["kind"] = to_string(regime.kind);
  rep["direction"] = to_string(regime.direction);
  rep["lambda1"] = sd.lambda1;
  rep["lambda2"] = sd.lambda2;
  std::optional<ReflectionCoefficients> gam;
  if (regime.sub()) {
    gam = reflection_coefficients(cfg);
    rep["gamma0"] = gam->gamma0;
    rep["gamma1"] = gam->gamma1;
    rep["gamma0_bound_sq"] = -sd.lambda2 / sd.lambda1;
    rep["gamma1_bound_sq"] = -sd.lambda1 / sd.lambda2;
  }
  const PenaltySet pen = default_penalties(sd, regime, gam);
  rep["tau01"] = pen.tau01;
  rep["tau02"] = pen.tau02;
  rep["tauN1"] = pen.tauN1;
  rep["tauN2"] = pen.tauN2;
  return rep;
}

static void write_manifest(const CliConfig& cc, const FlowConfig& cfg, const std::string& command,
                           double wall_seconds, const fs::path& out_dir) {
  json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["wall_seconds"] = wall_seconds;
  m["config"] = {{"g", cfg.g},
                 {"H", cfg.H},
                 {"U", cfg.U},
                 {"N", cc.n},
                 {"alpha", cc.effective_alpha(cfg)},
                 {"cr", cc.cr},
                 {"t_final", cc.t_final},
                 {"scenario", cc.scenario},
                 {"resolutions", cc.resolutions},
                 {"snapshots", cc.snapshots}};
  m["regime"] = regime_report(cfg);
  std::ofstream f(out_dir / "manifest.json");
  f << m.dump(2) << "\n";
}

static int cmd_simulate(const CliConfig& cc) {
  const auto t0 = std::chrono::steady_clock::now();
  const FlowConfig cfg = cc.flow();
  const Scenario scen = cc.make_scenario(cfg);
  const Grid grid = build_grid(cc.n, scen.L);

  RunParams params;
  params.cr = cc.cr;
  params.t_final = cc.t_final;
  params.alpha = cc.effective_alpha(cfg);
  params.record_energy = true;
  params.snapshot_times = cc.snapshots.empty() ? std::vector<double>{cc.t_final} : cc.snapshots;

  const RunResult res = run(scen, grid, cfg, params);

  const fs::path out_dir(cc.out_dir);
  fs::create_directories(out_dir);
  const double c = cfg.U + std::sqrt(cfg.gH());

  std::ofstream sol(out_dir / "solution.csv");
  sol << "t,x,x_scaled,h,u";
  if (scen.exact) sol << ",h_exact,u_exact";
  sol << "\n";
  for (const auto& [t, st] : res.snapshots) {
    for (int i = 0; i < grid.nodes(); ++i) {
      sol << fmt17(t) << "," << fmt17(grid.x[i]) << "," << fmt17(grid.x[i] / c) << ","
          << fmt17(st.h()[i]) << "," << fmt17(st.u()[i]);
      if (scen.exact) {
        const Vec2 q = scen.exact(grid.x[i], t);
        sol << "," << fmt17(q.x1) << "," << fmt17(q.x2);
      }
      sol << "\n";
    }
  }

  std::ofstream en(out_dir / "energy.csv");
  en << "t,energy\n";
  for (const auto& [t, e] : res.energy) en << fmt17(t) << "," << fmt17(e) << "\n";

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cc, cfg, "simulate", wall, out_dir);
  std::cout << "simulate: " << res.steps << " steps, " << res.snapshots.size()
            << " snapshots -> " << (out_dir / "solution.csv").string() << "\n";
  return 0;
}

static int cmd_converge(const CliConfig& cc) {
  const auto t0 = std::chrono::steady_clock::now();
  const FlowConfig cfg = cc.flow();
  CliConfig cc2 = cc;
  if (cc2.scenario != "mms") cc2.scenario = "mms";  // the convergence study is the MMS study
  const Scenario scen = cc2.make_scenario(cfg);

  RunParams params;
  params.cr = cc.cr;
  params.t_final = cc.t_final;
  params.alpha = cc.effective_alpha(cfg);

  const auto rows = convergence_table(scen, cfg, params, cc.resolutions);

  const fs::path out_dir(cc.out_dir);
  fs::create_directories(out_dir);
  const Regime regime = classify_regime(cfg);

  std::ofstream csv(out_dir / "convergence.csv");
  csv << "N,h_error,h_rate,u_error,u_rate,alpha,regime\n";
  for (const auto& r : rows) {
    csv << r.N << "," << fmt17(r.h_error) << ","
        << (r.h_rate ? fmt17(*r.h_rate) : std::string{}) << "," << fmt17(r.u_error) << ","
        << (r.u_rate ? fmt17(*r.u_rate) : std::string{}) << "," << fmt17(params.alpha) << ","
        << to_string(regime.kind) << "\n";
  }

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cc2, cfg, "converge", wall, out_dir);
  std::cout << "converge: " << rows.size() << " rows -> " << (out_dir / "convergence.csv").string()
            << "\n";
  return 0;
}

// Invariant suites, exercised on the configured flow plus a fixed set of
// canonical flows. Reports every check; exit 0 iff all pass.
static int cmd_verify(const CliConfig& cc) {
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  json checks = json::array();
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"pass", ok}, {"detail", detail}});
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << (detail.empty() ? "" : "  [" + detail + "]")
              << "\n";
    if (!ok) ++failures;
  };

  // SBP identity: Q + Q^T = diag(-1, 0, ..., 0, 1) exactly
  {
    const int n = 65;
    const auto Q = dense_Q(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double want = 0.0;
        if (i == j && i == 0) want = -1.0;
        if (i == j && i == n - 1) want = 1.0;
        worst = std::max(worst, std::abs(Q[i * n + j] + Q[j * n + i] - want));
      }
    check("sbp_identity_exact", worst == 0.0, "max deviation " + fmt17(worst));
  }

  // spectral algebra over random configurations
  {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> gen(0.1, 100.0);
    std::uniform_real_distribution<double> mul(-3.0, 3.0);
    double worst_orth = 0.0, worst_diag = 0.0;
    for (int k = 0; k < 1000; ++k) {
      FlowConfig cfg{gen(rng), gen(rng), 0.0};
      cfg.U = mul(rng) * std::sqrt(cfg.gH());
      const SpectralData sd = spectral_data(cfg);
      const Mat2 S = sd.S, St = S.transpose();
      const Mat2 I{St.a11 * S.a11 + St.a12 * S.a21, St.a11 * S.a12 + St.a12 * S.a22,
                   St.a21 * S.a11 + St.a22 * S.a21, St.a21 * S.a12 + St.a22 * S.a22};
      worst_orth = std::max({worst_orth, std::abs(I.a11 - 1), std::abs(I.a22 - 1),
                             std::abs(I.a12), std::abs(I.a21)});
      const Mat2 Mt = cfg.Mtilde();
      const Vec2 c1{S.a11, S.a21}, c2{S.a12, S.a22};
      const Vec2 m1 = Mt * c1, m2 = Mt * c2;
      const double gH = cfg.gH();
      const double scale = std::max({std::abs(Mt.a11), std::abs(Mt.a12), std::abs(Mt.a22)});
      worst_diag = std::max({worst_diag,
                             std::abs(c1.x1 * m1.x1 + c1.x2 * m1.x2 - gH * sd.lambda1) / scale,
                             std::abs(c2.x1 * m2.x1 + c2.x2 * m2.x2 - gH * sd.lambda2) / scale,
                             std::abs(c1.x1 * m2.x1 + c1.x2 * m2.x2) / scale});
    }
    check("eigen_orthonormality", worst_orth <= 1e-12, "worst " + fmt17(worst_orth));
    check("eigen_diagonalization", worst_diag <= 1e-9, "worst relative " + fmt17(worst_diag));
  }

  // gamma admissibility on the configured flow (with optional overrides)
  const FlowConfig cfg = cc.flow();
  const Regime regime = classify_regime(cfg);
  const SpectralData sd = spectral_data(cfg);
  std::optional<ReflectionCoefficients> gam;
  bool penalties_ok = true;
  if (regime.sub()) {
    gam = reflection_coefficients(cfg);
    if (!std::isnan(cc.gamma0_override)) gam->gamma0 = cc.gamma0_override;
    if (!std::isnan(cc.gamma1_override)) gam->gamma1 = cc.gamma1_override;
    const double b0 = -sd.lambda2 / sd.lambda1, b1 = -sd.lambda1 / sd.lambda2;
    penalties_ok = gam->gamma0 * gam->gamma0 <= b0 * (1 + 1e-12) &&
                   gam->gamma1 * gam->gamma1 <= b1 * (1 + 1e-12);
    check("gamma_admissibility", penalties_ok,
          "gamma0=" + fmt17(gam->gamma0) + " (bound^2 " + fmt17(b0) + "), gamma1=" +
              fmt17(gam->gamma1) + " (bound^2 " + fmt17(b1) + ")");
  }

  // energy-rate negativity for the configured flow (rejects inadmissible
  // overrides through the same code path the solver uses)
  if (penalties_ok || regime.sub()) {
    bool constructed = true;
    PenaltySet pen;
    try {
      pen = default_penalties(sd, regime, gam);
    } catch (const std::exception& e) {
      constructed = false;
      check("energy_rate_negativity", false, std::string("penalty construction rejected: ") + e.what());
    }
    if (constructed) {
      const Grid grid = build_grid(64, 1.0);
      const SbpOperators ops = build_operators(grid, 0.15 * cfg.wave_speed());
      const BoundaryData data{};  // b = 0
      std::mt19937 rng(777);
      std::normal_distribution<double> gauss;
      double worst = -1e300;
      for (int k = 0; k < 200; ++k) {
        State st;
        st.data.resize(2 * grid.nodes());
        for (auto& v : st.data) v = gauss(rng);
        const auto f = rhs(st, sd, ops, pen, data);
        double rate = 0.0;
        for (int i = 0; i < grid.nodes(); ++i)
          rate += grid.vol[i] * (cfg.g * st.h()[i] * f[i] + cfg.H * st.u()[i] * f[grid.nodes() + i]);
        worst = std::max(worst, rate / discrete_energy(st, cfg, grid));
      }
      check("energy_rate_negativity", worst <= 1e-10, "worst rate/energy " + fmt17(worst));
    }
  }

  // SAT consistency: a state satisfying the boundary conditions exactly
  // produces a zero SAT
  {
    std::optional<ReflectionCoefficients> g2;
    const FlowConfig sub{9.8, 1.0, 0.5 * std::sqrt(9.8)};
    const SpectralData sds = spectral_data(sub);
    g2 = reflection_coefficients(sub);
    const PenaltySet pen = default_penalties(sds, classify_regime(sub), g2);
    const Vec2 w{0.37, -1.21};
    const Vec2 q = from_characteristic(w, sds);
    BoundaryData data;
    data.b1 = [&](double) { return w.x1 - g2->gamma0 * w.x2; };
    data.b2 = [&](double) { return w.x2 - g2->gamma1 * w.x1; };
    const SatValues sat = assemble_sat(q, q, 0.0, sds, pen, data);
    const double norm = std::max({std::abs(sat.h0), std::abs(sat.u0), std::abs(sat.hN), std::abs(sat.uN)});
    check("sat_consistency", norm <= 1e-12, "residual SAT " + fmt17(norm));
  }

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const fs::path out_dir(cc.out_dir);
  fs::create_directories(out_dir);
  json report;
  report["command"] = "verify";
  report["version"] = kVersion;
  report["wall_seconds"] = wall;
  report["checks"] = checks;
  report["failures"] = failures;
  std::ofstream f(out_dir / "verify.json");
  f << report.dump(2) << "\n";

  std::cout << (failures == 0 ? "verify: all checks passed\n"
                              : "verify: " + std::to_string(failures) + " check(s) FAILED\n");
  return failures == 0 ? 0 : 1;
}

int main(int argc, char** argv) {
  CLI::App app{"Energy-stable finite volume solver for the 1D linearized shallow water equations"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "flat key=value config file; command line overrides");

  CliConfig cc;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--g", cc.g, "gravitational acceleration")->check(CLI::PositiveNumber);
    sub->add_option("--depth", cc.H, "mean water depth H")->check(CLI::PositiveNumber);
    sub->add_option("--regime", cc.regime, "flow regime: sub|critical|super")
        ->check(CLI::IsMember({"sub", "critical", "super"}));
    sub->add_option("--u-multiple", cc.u_multiple, "U = r * sqrt(gH)");
    sub->add_option("--n", cc.n, "number of finite volume intervals")->check(CLI::Range(2, 1 << 24));
    sub->add_option("--alpha", cc.alpha, "dissipation strength")->check(CLI::NonNegativeNumber);
    sub->add_option("--alpha-scaled", cc.alpha_scaled, "alpha = c * (|U| + sqrt(gH))")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--cr", cc.cr, "CFL number")->check(CLI::Range(1e-6, 1.0));
    sub->add_option("--t-final", cc.t_final, "final time")->check(CLI::NonNegativeNumber);
    sub->add_option("--scenario", cc.scenario, "smooth-pulse|step-pulse|mms|zero-random");
    sub->add_option("--out-dir", cc.out_dir, "output directory");
  };

  auto* sim = app.add_subcommand("simulate", "run one simulation, write solution/energy CSVs");
  add_common(sim);
  sim->add_option("--snapshots", cc.snapshots, "comma-separated snapshot times")->delimiter(',');

  auto* conv = app.add_subcommand("converge", "MMS convergence table");
  add_common(conv);
  conv->add_option("--resolutions", cc.resolutions, "comma-separated interval counts")
      ->delimiter(',');

  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  add_common(ver);
  ver->add_option("--gamma0", cc.gamma0_override, "override reflection coefficient gamma0");
  ver->add_option("--gamma1", cc.gamma1_override, "override reflection coefficient gamma1");

  app.require_subcommand(1);
  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(cc);
    if (conv->parsed()) return cmd_converge(cc);
    return cmd_verify(cc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
