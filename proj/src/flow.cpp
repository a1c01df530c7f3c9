#include "swwe/flow.hpp"

#include <cmath>

namespace swwe {

std::string to_string(FlowKind k) {
  switch (k) {
    case FlowKind::SubCritical: return "sub-critical";
    case FlowKind::Critical: return "critical";
    case FlowKind::SuperCritical: return "super-critical";
  }
  return "?";
}

std::string to_string(FlowDirection d) {
  switch (d) {
    case FlowDirection::Positive: return "positive";
    case FlowDirection::Negative: return "negative";
    case FlowDirection::Zero: return "zero";
  }
  return "?";
}

Regime classify_regime(const FlowConfig& cfg, double tol) {
  cfg.validate();
  Regime r;
  r.direction = cfg.U > 0.0 ? FlowDirection::Positive
              : cfg.U < 0.0 ? FlowDirection::Negative
                            : FlowDirection::Zero;
  const double gH = cfg.gH();
  const double gap = cfg.U * cfg.U - gH;
  if (std::abs(gap) <= tol * gH)
    r.kind = FlowKind::Critical;
  else
    r.kind = gap < 0.0 ? FlowKind::SubCritical : FlowKind::SuperCritical;
  return r;
}

SpectralData spectral_data(const FlowConfig& cfg) {
  cfg.validate();
  const double g = cfg.g, H = cfg.H, U = cfg.U;
  const double gH = g * H;
  // discriminant of the scaled characteristic polynomial; identically equal
  // to U^2 (g-H)^2 + 4 g^2 H^2 > 0, so eigenvalues are always real/distinct
  const double disc = U * U * (g + H) * (g + H) + 4.0 * gH * (gH - U * U);
  if (!(disc > 0.0))
    throw std::runtime_error("spectral_data: nonpositive discriminant (inconsistent configuration)");
  const double root = std::sqrt(disc);

  SpectralData sd;
  sd.cfg = cfg;
  sd.lambda1 = (U * (g + H) + root) / (2.0 * gH);
  sd.lambda2 = (U * (g + H) - root) / (2.0 * gH);
  const double s1 = sd.lambda1 - U / g;
  const double s2 = sd.lambda2 - U / g;
  sd.c = std::sqrt(s1 * s1 + 1.0);
  sd.d = std::sqrt(s2 * s2 + 1.0);
  sd.S = {s1 / sd.c, s2 / sd.d,
          1.0 / sd.c, 1.0 / sd.d};
  return sd;
}

Vec2 to_characteristic(const Vec2& q, const SpectralData& sd) {
  return sd.S.transpose() * q;
}

Vec2 from_characteristic(const Vec2& w, const SpectralData& sd) {
  return sd.S * w;
}

ReflectionCoefficients reflection_coefficients(const FlowConfig& cfg) {
  const Regime regime = classify_regime(cfg);
  if (!regime.sub())
    throw std::invalid_argument("reflection_coefficients: defined for sub-critical flow only");
  const SpectralData sd = spectral_data(cfg);
  const double r = std::sqrt(cfg.g / cfg.H);
  const double a1 = sd.S.a11, a2 = sd.S.a12;  // h-components of S columns
  const double v1 = sd.S.a21, v2 = sd.S.a22;  // u-components

  // w1 - gamma0*w2 = (a1 - gamma0 a2) h + (v1 - gamma0 v2) u must be
  // proportional to h + u/r  =>  r(v1 - gamma0 v2) = a1 - gamma0 a2.
  ReflectionCoefficients gam;
  gam.gamma0 = (r * v1 - a1) / (r * v2 - a2);
  // w2 - gamma1*w1 proportional to h - u/r  =>  -r(v2 - gamma1 v1) = a2 - gamma1 a1.
  gam.gamma1 = (a2 + r * v2) / (a1 + r * v1);

  const double bound0 = -sd.lambda2 / sd.lambda1;
  const double bound1 = -sd.lambda1 / sd.lambda2;
  const double slack = 1e-12;
  if (!(gam.gamma0 * gam.gamma0 <= bound0 * (1.0 + slack)) ||
      !(gam.gamma1 * gam.gamma1 <= bound1 * (1.0 + slack)))
    throw std::runtime_error("reflection_coefficients: admissibility bounds violated (derivation bug)");
  return gam;
}

BoundaryScalings inflow_outflow_scalings(const FlowConfig& cfg) {
  const Regime regime = classify_regime(cfg);
  const SpectralData sd = spectral_data(cfg);
  const double a1 = sd.S.a11, a2 = sd.S.a12;
  BoundaryScalings k;
  if (regime.sub()) {
    const ReflectionCoefficients gam = reflection_coefficients(cfg);
    k.kappa0 = a1 - gam.gamma0 * a2;
    k.kappa1 = a2 - gam.gamma1 * a1;
  } else if (regime.critical()) {
    // w1 (U>0) or w2 (U<0) is itself proportional to the physical data form;
    // the proportionality constant is the h-component of the S column.
    k.kappa0 = a1;
    k.kappa1 = a2;
  } else {
    throw std::invalid_argument(
        "inflow_outflow_scalings: super-critical data uses the full (h,u) inflow map");
  }
  const double floor = 1e-300;
  if (std::abs(regime.sub() ? k.kappa0 : (cfg.U > 0 ? k.kappa0 : k.kappa1)) < floor)
    throw std::runtime_error("inflow_outflow_scalings: degenerate proportionality coefficient");
  return k;
}

}  // namespace swwe
