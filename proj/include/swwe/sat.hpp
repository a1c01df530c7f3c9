#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "swwe/flow.hpp"

namespace swwe {

// Number of conditions imposed weakly at each boundary. The admissible
// pattern is a function of the regime alone:
//   sub-critical        : 1 left, 1 right
//   critical     U > 0  : 1 left, 0 right
//   critical     U < 0  : 0 left, 1 right
//   super-critical U > 0: 2 left, 0 right
//   super-critical U < 0: 0 left, 2 right
struct BcPattern {
  int left = 0;
  int right = 0;
  bool operator==(const BcPattern&) const = default;
};

BcPattern required_bc_pattern(const Regime& regime);

// Throws std::invalid_argument unless the requested pattern is exactly the
// one the regime admits (too few conditions -> ill-posed, too many ->
// over-specified; both are refused).
void validate_bc_pattern(const Regime& regime, const BcPattern& requested);

// Penalty scalars of the stability theorems. tau01/tau02 act at node 0,
// tauN1/tauN2 at node N; the sub-critical case carries the reflection
// coefficients with it.
struct PenaltySet {
  double tau01 = 0.0, tau02 = 0.0, tauN1 = 0.0, tauN2 = 0.0;
  double gamma0 = 0.0, gamma1 = 0.0;  // meaningful only when sub-critical
  Regime regime;
};

// Sub-critical uses the equality choices tau01=lambda1, tau02=gamma0*lambda1,
// tauN2=-lambda2, tauN1=-gamma1*lambda2. Critical/super-critical use the
// minimal admissible bound values. gammas must be supplied iff sub-critical;
// inadmissible gammas are rejected.
PenaltySet default_penalties(const SpectralData& sd, const Regime& regime,
                             const std::optional<ReflectionCoefficients>& gammas = std::nullopt);

// Characteristic boundary data b1(t), b2(t). Which of the two is consulted
// depends on the regime (see required_bc_pattern).
struct BoundaryData {
  std::function<double(double)> b1;  // null treated as 0
  std::function<double(double)> b2;

  double eval_b1(double t) const { return b1 ? b1(t) : 0.0; }
  double eval_b2(double t) const { return b2 ? b2(t) : 0.0; }
};

// SAT contributions at the four boundary degrees of freedom (h and u at
// nodes 0 and N), before the P^{-1} scaling. All other nodes receive zero.
struct SatValues {
  double h0 = 0.0, u0 = 0.0, hN = 0.0, uN = 0.0;
};

SatValues assemble_sat(const Vec2& q0, const Vec2& qN, double t,
                       const SpectralData& sd, const PenaltySet& pen,
                       const BoundaryData& data);

// State-shaped SAT vector (component-major [h;u], length 2(N+1)), mainly for
// tests; the solver adds SatValues in place instead.
std::vector<double> assemble_sat_vector(const std::vector<double>& state, double t,
                                        const SpectralData& sd, const PenaltySet& pen,
                                        const BoundaryData& data);

}  // namespace swwe
