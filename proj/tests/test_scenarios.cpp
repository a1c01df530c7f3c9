#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "swwe/flow.hpp"
#include "swwe/scenarios.hpp"

using namespace swwe;
using std::numbers::pi;

namespace {
const double kRootGH = std::sqrt(9.8);

// Templated analytic forms so the complex-step trick (f'(x) = Im f(x+ih)/h,
// h ~ 1e-100, no subtractive cancellation) yields derivatives to machine
// precision.
template <class T>
T g1_smooth(T t) {
  using std::sin;
  const T s = sin(pi * t);
  return s * s * s * s;
}

template <class T>
T mms_h(T x, T t) {
  using std::cos;
  using std::sin;
  return cos(2.0 * pi * t) * sin(6.0 * pi * x);
}

template <class T>
T mms_u(T x, T t) {
  using std::cos;
  using std::sin;
  return sin(2.0 * pi * t) * cos(4.0 * pi * x);
}

constexpr double kStep = 1e-100;

// d/dx f(x, t) and d/dt f(x, t) by complex step
template <class F>
double d_dx(const F& f, double x, double t) {
  return f(std::complex<double>(x, kStep), std::complex<double>(t, 0.0)).imag() / kStep;
}
template <class F>
double d_dt(const F& f, double x, double t) {
  return f(std::complex<double>(x, 0.0), std::complex<double>(t, kStep)).imag() / kStep;
}
}  // namespace

TEST_SUITE_BEGIN("scenarios");

TEST_CASE("smooth pulse") {
  const FlowConfig cfg{9.8, 1.0, 0.5 * kRootGH};
  const Scenario s = smooth_pulse_scenario(cfg);
  const double c = cfg.U + kRootGH;

  SUBCASE("boundary data values and support") {
    CHECK(s.g1(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.g1(0.0) == 0.0);
    CHECK(s.g1(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.g1(-0.3) == 0.0);
    CHECK(s.g1(1.7) == 0.0);
    CHECK(s.g2(0.4) == 0.0);
    CHECK(s.L == doctest::Approx(5.0 * c).epsilon(1e-15));
  }
  SUBCASE("zero initial data, causal support of the exact solution") {
    for (double x : {0.0, 1.0, s.L}) {
      const Vec2 q = s.initial(x);
      CHECK(q.x1 == 0.0);
      CHECK(q.x2 == 0.0);
    }
    // nothing ahead of the wavefront x = c t
    CHECK(s.exact(0.4 * c, 0.5).x1 > 0.0);
    CHECK(s.exact(1.1 * c, 1.0).x1 == 0.0);
    CHECK(s.exact(s.L, 2.0).x1 == 0.0);
  }
  SUBCASE("u = sqrt(g/H) h and constancy along characteristics") {
    const double r = std::sqrt(cfg.g / cfg.H);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> uni(0.05, 0.95);
    for (int k = 0; k < 50; ++k) {
      const double s0 = uni(rng);  // phase t - x/c, inside the pulse
      const double x1 = uni(rng) * s.L, x2 = uni(rng) * s.L;
      const Vec2 q1 = s.exact(x1, s0 + x1 / c);
      const Vec2 q2 = s.exact(x2, s0 + x2 / c);
      REQUIRE(std::abs(q1.x1 - q2.x1) <= 1e-14);
      REQUIRE(q1.x2 == doctest::Approx(r * q1.x1).epsilon(1e-14));
    }
  }
  SUBCASE("exact solution satisfies the PDE (complex-step residual)") {
    auto h_fn = [&](std::complex<double> x, std::complex<double> t) {
      return g1_smooth(t - x / c);
    };
    auto u_fn = [&](std::complex<double> x, std::complex<double> t) {
      return std::sqrt(cfg.g / cfg.H) * g1_smooth(t - x / c);
    };
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.05, 0.95);
    for (int k = 0; k < 100; ++k) {
      const double phase = uni(rng);
      const double x = uni(rng) * s.L;
      const double t = phase + x / c;
      const double rh = d_dt(h_fn, x, t) + cfg.U * d_dx(h_fn, x, t) + cfg.H * d_dx(u_fn, x, t);
      const double ru = d_dt(u_fn, x, t) + cfg.g * d_dx(h_fn, x, t) + cfg.U * d_dx(u_fn, x, t);
      REQUIRE(std::abs(rh) <= 1e-10);
      REQUIRE(std::abs(ru) <= 1e-10);
      // and the scenario's own exact matches the templated form
      REQUIRE(s.exact(x, t).x1 == doctest::Approx(g1_smooth(t - x / c)).epsilon(1e-14));
    }
  }
  SUBCASE("requires positive advection") {
    CHECK_THROWS_AS(smooth_pulse_scenario(FlowConfig{9.8, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(smooth_pulse_scenario(FlowConfig{9.8, 1.0, -kRootGH}), std::invalid_argument);
  }
}

TEST_CASE("step pulse") {
  const FlowConfig cfg{9.8, 1.0, 0.5 * kRootGH};
  const Scenario s = step_pulse_scenario(cfg);
  CHECK(s.g1(0.0) == 0.0);  // the jump enters through the data, not the IC
  CHECK(s.g1(0.5) == 1.0);
  CHECK(s.g1(1.0) == 1.0);
  CHECK(s.g1(1.0 + 1e-12) == 0.0);
  CHECK(s.g1(2.0) == 0.0);
  const double c = cfg.U + kRootGH;
  CHECK(s.exact(0.25 * c, 0.5).x1 == 1.0);   // behind the front
  CHECK(s.exact(0.75 * c, 0.5).x1 == 0.0);   // ahead of it
  CHECK_THROWS_AS(step_pulse_scenario(FlowConfig{9.8, 1.0, -0.1}), std::invalid_argument);
}

TEST_CASE("manufactured solution") {
  SUBCASE("initial and boundary traces") {
    const FlowConfig cfg{9.8, 1.0, 0.5 * kRootGH};
    const Scenario s = mms_scenario(cfg);
    for (double x : {0.0, 0.17, 0.5, 1.0}) {
      const Vec2 q = s.initial(x);
      CHECK(q.x1 == doctest::Approx(std::sin(6 * pi * x)).epsilon(1e-14));
      CHECK(q.x2 == 0.0);
    }
    CHECK(s.g1(0.0) == doctest::Approx(0.0).epsilon(1e-14));  // h(0,0)=sin 0, u(.,0)=0
    CHECK(s.L == 1.0);
  }
  SUBCASE("forcing closes the PDE residual (complex-step oracle, every regime)") {
    for (double u_mult : {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0}) {
      const FlowConfig cfg{9.8, 1.0, u_mult * kRootGH};
      const Scenario s = mms_scenario(cfg);
      std::mt19937 rng(11);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      for (int k = 0; k < 100; ++k) {
        const double x = uni(rng), t = uni(rng);
        const Vec2 F = s.forcing(x, t);
        const double want_h = d_dt(mms_h<std::complex<double>>, x, t) +
                              cfg.U * d_dx(mms_h<std::complex<double>>, x, t) +
                              cfg.H * d_dx(mms_u<std::complex<double>>, x, t);
        const double want_u = d_dt(mms_u<std::complex<double>>, x, t) +
                              cfg.g * d_dx(mms_h<std::complex<double>>, x, t) +
                              cfg.U * d_dx(mms_u<std::complex<double>>, x, t);
        REQUIRE(F.x1 == doctest::Approx(want_h).epsilon(1e-10));
        REQUIRE(F.x2 == doctest::Approx(want_u).epsilon(1e-10));
        const Vec2 q = s.exact(x, t);
        REQUIRE(q.x1 == doctest::Approx(mms_h(x, t)).epsilon(1e-14));
        REQUIRE(q.x2 == doctest::Approx(mms_u(x, t)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("boundary data mapping") {
  SUBCASE("sub-critical: b1 = 2 kappa0 g1, b2 = 2 kappa1 g2") {
    const FlowConfig cfg{9.8, 1.0, 0.5 * kRootGH};
    const Scenario s = smooth_pulse_scenario(cfg);
    const BoundaryData data = boundary_data_for(s, cfg);
    const BoundaryScalings k = inflow_outflow_scalings(cfg);
    for (double t : {0.1, 0.35, 0.5, 0.8, 1.4}) {
      REQUIRE(std::abs(data.eval_b1(t) - 2.0 * k.kappa0 * s.g1(t)) <= 1e-12);
      REQUIRE(data.eval_b2(t) == 0.0);
    }
  }
  SUBCASE("critical U>0: single inflow condition") {
    const FlowConfig cfg{9.8, 1.0, kRootGH};
    const Scenario s = mms_scenario(cfg);
    const BoundaryData data = boundary_data_for(s, cfg);
    const BoundaryScalings k = inflow_outflow_scalings(cfg);
    CHECK(!data.b2);
    for (double t : {0.1, 0.7})
      REQUIRE(std::abs(data.eval_b1(t) - 2.0 * k.kappa0 * s.g1(t)) <= 1e-12);
  }
  SUBCASE("critical U<0: single condition at the right") {
    const FlowConfig cfg{9.8, 1.0, -kRootGH};
    const Scenario s = mms_scenario(cfg);
    const BoundaryData data = boundary_data_for(s, cfg);
    const BoundaryScalings k = inflow_outflow_scalings(cfg);
    CHECK(!data.b1);
    for (double t : {0.1, 0.7})
      REQUIRE(std::abs(data.eval_b2(t) - 2.0 * k.kappa1 * s.g2(t)) <= 1e-12);
  }
  SUBCASE("super-critical: b = S^T (g1+g2, r(g1-g2)) reproduces the exact trace") {
    const FlowConfig cfg{9.8, 1.0, 2.0 * kRootGH};
    const Scenario s = mms_scenario(cfg);
    const BoundaryData data = boundary_data_for(s, cfg);
    const SpectralData sd = spectral_data(cfg);
    for (double t : {0.13, 0.4, 0.9}) {
      // for MMS data sampled at the inflow x=0, (g1+g2, r(g1-g2)) recovers
      // (h, u)(0, t), so b must equal the exact characteristic trace
      const Vec2 w = to_characteristic(s.exact(0.0, t), sd);
      REQUIRE(data.eval_b1(t) == doctest::Approx(w.x1).epsilon(1e-12));
      REQUIRE(data.eval_b2(t) == doctest::Approx(w.x2).epsilon(1e-12));
    }
  }
}

TEST_SUITE_END();
