#include "swwe/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swwe {

using std::numbers::pi;

static Scenario pulse_common(const FlowConfig& cfg, std::function<double(double)> g1,
                             std::string name) {
  cfg.validate();
  if (!(cfg.U > 0.0))
    throw std::invalid_argument(name + ": requires U > 0 (x=0 is the inflow boundary)");
  const double c = cfg.U + std::sqrt(cfg.gH());
  const double ratio = std::sqrt(cfg.g / cfg.H);  // u = sqrt(g/H) h on the pulse

  Scenario s;
  s.name = std::move(name);
  s.L = 5.0 * c;
  s.initial = [](double) { return Vec2{0.0, 0.0}; };
  s.g1 = g1;
  s.g2 = [](double) { return 0.0; };
  s.exact = [g1 = std::move(g1), c, ratio](double x, double t) {
    const double h = g1(t - x / c);
    return Vec2{h, ratio * h};
  };
  return s;
}

Scenario smooth_pulse_scenario(const FlowConfig& cfg) {
  auto g1 = [](double t) {
    if (t < 0.0 || t > 1.0) return 0.0;
    const double s = std::sin(pi * t);
    return s * s * s * s;
  };
  return pulse_common(cfg, g1, "smooth-pulse");
}

Scenario step_pulse_scenario(const FlowConfig& cfg) {
  auto g1 = [](double t) { return (t > 0.0 && t <= 1.0) ? 1.0 : 0.0; };
  return pulse_common(cfg, g1, "step-pulse");
}

Scenario mms_scenario(const FlowConfig& cfg) {
  cfg.validate();
  const double g = cfg.g, H = cfg.H, U = cfg.U;
  const Regime regime = classify_regime(cfg);
  const double inv_r = std::sqrt(H / g);

  Scenario s;
  s.name = "mms";
  s.L = 1.0;

  auto h_ex = [](double x, double t) { return std::cos(2 * pi * t) * std::sin(6 * pi * x); };
  auto u_ex = [](double x, double t) { return std::sin(2 * pi * t) * std::cos(4 * pi * x); };
  s.exact = [h_ex, u_ex](double x, double t) { return Vec2{h_ex(x, t), u_ex(x, t)}; };
  s.initial = [h_ex, u_ex](double x) { return Vec2{h_ex(x, 0.0), u_ex(x, 0.0)}; };

  s.forcing = [g, H, U](double x, double t) {
    const double s2t = std::sin(2 * pi * t), c2t = std::cos(2 * pi * t);
    const double Fh = -2 * pi * s2t * std::sin(6 * pi * x) +
                      6 * pi * U * c2t * std::cos(6 * pi * x) -
                      4 * pi * H * s2t * std::sin(4 * pi * x);
    const double Fu = 2 * pi * c2t * std::cos(4 * pi * x) +
                      6 * pi * g * c2t * std::cos(6 * pi * x) -
                      4 * pi * U * s2t * std::sin(4 * pi * x);
    return Vec2{Fh, Fu};
  };

  // Physical boundary data sampled from the exact solution. The inflow-type
  // form lives at x=0 for U>=0 and moves to x=L for critical/super-critical
  // U<0; the outflow-type form mirrors it.
  const double L = s.L;
  const double x_g1 = (U < 0.0 && !regime.sub()) ? L : 0.0;
  const double x_g2 = (regime.super() && U > 0.0) ? 0.0 : L;
  s.g1 = [h_ex, u_ex, inv_r, x_g1](double t) {
    return 0.5 * (h_ex(x_g1, t) + inv_r * u_ex(x_g1, t));
  };
  s.g2 = [h_ex, u_ex, inv_r, x_g2](double t) {
    return 0.5 * (h_ex(x_g2, t) - inv_r * u_ex(x_g2, t));
  };
  return s;
}

Scenario zero_scenario(const FlowConfig& cfg) {
  cfg.validate();
  Scenario s;
  s.name = "zero";
  s.L = 1.0;
  s.initial = [](double) { return Vec2{0.0, 0.0}; };
  s.exact = [](double, double) { return Vec2{0.0, 0.0}; };
  return s;
}

BoundaryData boundary_data_for(const Scenario& scenario, const FlowConfig& cfg) {
  const Regime regime = classify_regime(cfg);
  const SpectralData sd = spectral_data(cfg);
  auto g1 = scenario.g1 ? scenario.g1 : [](double) { return 0.0; };
  auto g2 = scenario.g2 ? scenario.g2 : [](double) { return 0.0; };

  BoundaryData data;
  if (regime.sub()) {
    const BoundaryScalings k = inflow_outflow_scalings(cfg);
    data.b1 = [g1, k](double t) { return 2.0 * k.kappa0 * g1(t); };
    data.b2 = [g2, k](double t) { return 2.0 * k.kappa1 * g2(t); };
  } else if (regime.critical()) {
    const BoundaryScalings k = inflow_outflow_scalings(cfg);
    if (cfg.U > 0.0)
      data.b1 = [g1, k](double t) { return 2.0 * k.kappa0 * g1(t); };
    else
      data.b2 = [g2, k](double t) { return 2.0 * k.kappa1 * g2(t); };
  } else {
    // fully specified (h,u) at the inflow: h = g1+g2, u = sqrt(g/H)(g1-g2);
    // b = S^T (h,u)
    const double r = std::sqrt(cfg.g / cfg.H);
    const Mat2 St = sd.S.transpose();
    data.b1 = [g1, g2, r, St](double t) {
      const Vec2 q{g1(t) + g2(t), r * (g1(t) - g2(t))};
      return (St * q).x1;
    };
    data.b2 = [g1, g2, r, St](double t) {
      const Vec2 q{g1(t) + g2(t), r * (g1(t) - g2(t))};
      return (St * q).x2;
    };
  }
  return data;
}

}  // namespace swwe
