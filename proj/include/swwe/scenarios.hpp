#pragma once

#include <functional>
#include <string>

#include "swwe/flow.hpp"
#include "swwe/sat.hpp"

namespace swwe {

// An experiment description. g1 carries the data tied to the inflow-type
// form (h + sqrt(H/g)u)/2, g2 the outflow-type form (h - sqrt(H/g)u)/2, each
// evaluated at the boundary the regime assigns it to. forcing/exact are null
// when absent.
struct Scenario {
  std::string name;
  double L = 1.0;
  std::function<Vec2(double x)> initial;
  std::function<double(double t)> g1, g2;
  std::function<Vec2(double x, double t)> forcing;
  std::function<Vec2(double x, double t)> exact;
};

// Smooth pulse: zero initial data, g1 = sin^4(pi t) on [0,1], g2 = 0,
// L = 5(U + sqrt(gH)). Exact: h = g1(t - x/(U+sqrt(gH))), u = sqrt(g/H) h.
// Requires U > 0 (x=0 is the inflow).
Scenario smooth_pulse_scenario(const FlowConfig& cfg);

// Same with the unit step g1 = 1 on (0,1] (g1(0)=0; the discontinuity enters
// through the boundary data).
Scenario step_pulse_scenario(const FlowConfig& cfg);

// Manufactured solution h = cos(2 pi t) sin(6 pi x), u = sin(2 pi t) cos(4 pi x)
// on L=1 with the analytically derived forcing; initial and boundary data
// sampled from the exact solution. Valid in every regime and for either sign
// of U.
Scenario mms_scenario(const FlowConfig& cfg);

// Zero data everywhere; for equilibrium/property tests.
Scenario zero_scenario(const FlowConfig& cfg);

// Map the scenario's physical data (g1, g2) to characteristic data (b1, b2)
// for the given flow. Sub-critical: b1 = 2 kappa0 g1, b2 = 2 kappa1 g2.
// Critical: the single inflow condition per sign of U. Super-critical: the
// full (h,u) = (g1+g2, sqrt(g/H)(g1-g2)) map at the inflow, b = S^T (h,u).
BoundaryData boundary_data_for(const Scenario& scenario, const FlowConfig& cfg);

}  // namespace swwe
