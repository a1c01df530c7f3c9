#include "swwe/sat.hpp"

#include <cmath>
#include <stdexcept>

namespace swwe {

BcPattern required_bc_pattern(const Regime& regime) {
  switch (regime.kind) {
    case FlowKind::SubCritical:
      return {1, 1};
    case FlowKind::Critical:
      return regime.direction == FlowDirection::Negative ? BcPattern{0, 1} : BcPattern{1, 0};
    case FlowKind::SuperCritical:
      return regime.direction == FlowDirection::Negative ? BcPattern{0, 2} : BcPattern{2, 0};
  }
  throw std::logic_error("required_bc_pattern: bad regime");
}

void validate_bc_pattern(const Regime& regime, const BcPattern& requested) {
  const BcPattern want = required_bc_pattern(regime);
  if (requested == want) return;
  throw std::invalid_argument(
      "boundary condition pattern {" + std::to_string(requested.left) + "," +
      std::to_string(requested.right) + "} inconsistent with " + to_string(regime.kind) +
      " flow (" + to_string(regime.direction) + " U): require {" +
      std::to_string(want.left) + "," + std::to_string(want.right) + "}");
}

PenaltySet default_penalties(const SpectralData& sd, const Regime& regime,
                             const std::optional<ReflectionCoefficients>& gammas) {
  if (regime.sub() != gammas.has_value())
    throw std::invalid_argument(
        "default_penalties: reflection coefficients required iff sub-critical");

  PenaltySet pen;
  pen.regime = regime;
  const double l1 = sd.lambda1, l2 = sd.lambda2;

  if (regime.sub()) {
    const double g0 = gammas->gamma0, g1 = gammas->gamma1;
    if (!(g0 * g0 <= -l2 / l1 * (1.0 + 1e-12)) || !(g1 * g1 <= -l1 / l2 * (1.0 + 1e-12)))
      throw std::invalid_argument("default_penalties: inadmissible reflection coefficients");
    pen.gamma0 = g0;
    pen.gamma1 = g1;
    pen.tau01 = l1;
    pen.tau02 = g0 * l1;
    pen.tauN2 = -l2;
    pen.tauN1 = -g1 * l2;
  } else if (regime.critical()) {
    if (regime.direction == FlowDirection::Negative) {
      pen.tauN2 = -l2;  // lambda1 = 0; the single condition sits at x = L
    } else {
      pen.tau01 = l1;   // lambda2 = 0; single condition at x = 0
    }
  } else {  // super-critical: all conditions at the inflow, nothing at the outflow
    if (regime.direction == FlowDirection::Negative) {
      pen.tauN1 = -l1;
      pen.tauN2 = -l2;
    } else {
      pen.tau01 = l1;
      pen.tau02 = l2;
    }
  }
  return pen;
}

SatValues assemble_sat(const Vec2& q0, const Vec2& qN, double t,
                       const SpectralData& sd, const PenaltySet& pen,
                       const BoundaryData& data) {
  const double g = sd.cfg.g, H = sd.cfg.H;
  const Vec2 w0 = to_characteristic(q0, sd);
  const Vec2 wN = to_characteristic(qN, sd);

  // Weighted residual stack: the w1 channel carries H-weights, the w2 channel
  // g-weights; both ends get mapped back through T = W^{-1} S W.
  double top0 = 0.0, bot0 = 0.0, topN = 0.0, botN = 0.0;
  switch (pen.regime.kind) {
    case FlowKind::SubCritical: {
      const double R0 = w0.x1 - pen.gamma0 * w0.x2 - data.eval_b1(t);
      const double RN = wN.x2 - pen.gamma1 * wN.x1 - data.eval_b2(t);
      top0 = pen.tau01 * H * R0;
      bot0 = pen.tau02 * g * R0;
      topN = pen.tauN1 * H * RN;
      botN = pen.tauN2 * g * RN;
      break;
    }
    case FlowKind::Critical: {
      if (pen.regime.direction == FlowDirection::Negative)
        botN = pen.tauN2 * g * (wN.x2 - data.eval_b2(t));
      else
        top0 = pen.tau01 * H * (w0.x1 - data.eval_b1(t));
      break;
    }
    case FlowKind::SuperCritical: {
      if (pen.regime.direction == FlowDirection::Negative) {
        topN = pen.tauN1 * H * (wN.x1 - data.eval_b1(t));
        botN = pen.tauN2 * g * (wN.x2 - data.eval_b2(t));
      } else {
        top0 = pen.tau01 * H * (w0.x1 - data.eval_b1(t));
        bot0 = pen.tau02 * g * (w0.x2 - data.eval_b2(t));
      }
      break;
    }
  }

  // T = W^{-1} S W, W = diag(g, H)
  const double T11 = sd.S.a11, T12 = sd.S.a12 * H / g;
  const double T21 = sd.S.a21 * g / H, T22 = sd.S.a22;

  SatValues sat;
  sat.h0 = -0.5 * (T11 * top0 + T12 * bot0);
  sat.u0 = -0.5 * (T21 * top0 + T22 * bot0);
  sat.hN = -0.5 * (T11 * topN + T12 * botN);
  sat.uN = -0.5 * (T21 * topN + T22 * botN);
  return sat;
}

std::vector<double> assemble_sat_vector(const std::vector<double>& state, double t,
                                        const SpectralData& sd, const PenaltySet& pen,
                                        const BoundaryData& data) {
  if (state.size() % 2 != 0 || state.size() < 4)
    throw std::invalid_argument("assemble_sat_vector: bad state shape");
  const int n = static_cast<int>(state.size()) / 2;
  const Vec2 q0{state[0], state[n]};
  const Vec2 qN{state[n - 1], state[2 * n - 1]};
  const SatValues sat = assemble_sat(q0, qN, t, sd, pen, data);
  std::vector<double> out(state.size(), 0.0);
  out[0] = sat.h0;
  out[n - 1] = sat.hN;
  out[n] = sat.u0;
  out[2 * n - 1] = sat.uN;
  return out;
}

}  // namespace swwe
