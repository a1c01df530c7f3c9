#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace swwe {

// 2-vector / 2x2 matrix helpers for the (h,u) system. Everything in this
// module is closed-form; no external linear algebra.
struct Vec2 {
  double x1 = 0.0, x2 = 0.0;
};

struct Mat2 {
  // row-major: [[a11, a12], [a21, a22]]
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

  Vec2 operator*(const Vec2& v) const {
    return {a11 * v.x1 + a12 * v.x2, a21 * v.x1 + a22 * v.x2};
  }
  Mat2 operator*(const Mat2& b) const {
    return {a11 * b.a11 + a12 * b.a21, a11 * b.a12 + a12 * b.a22,
            a21 * b.a11 + a22 * b.a21, a21 * b.a12 + a22 * b.a22};
  }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }
};

struct FlowConfig {
  double g = 9.8;  // gravitational acceleration [m/s^2]
  double H = 1.0;  // mean water depth [m]
  double U = 0.0;  // mean velocity [m/s], any sign

  void validate() const {
    if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("FlowConfig: g must be positive and finite");
    if (!(H > 0.0) || !std::isfinite(H)) throw std::invalid_argument("FlowConfig: H must be positive and finite");
    if (!std::isfinite(U)) throw std::invalid_argument("FlowConfig: U must be finite");
  }

  double gH() const { return g * H; }
  double froude_sq() const { return U * U / (g * H); }
  // fastest signal speed |U| + sqrt(gH); used by the CFL rule
  double wave_speed() const { return std::abs(U) + std::sqrt(g * H); }
  // system matrix M = [[U, H], [g, U]]
  Mat2 M() const { return {U, H, g, U}; }
  // symmetrized matrix W*M, W = diag(g, H)
  Mat2 Mtilde() const { return {g * U, g * H, g * H, H * U}; }
};

enum class FlowKind { SubCritical, Critical, SuperCritical };
enum class FlowDirection { Positive, Negative, Zero };

struct Regime {
  FlowKind kind = FlowKind::SubCritical;
  FlowDirection direction = FlowDirection::Zero;

  bool sub() const { return kind == FlowKind::SubCritical; }
  bool critical() const { return kind == FlowKind::Critical; }
  bool super() const { return kind == FlowKind::SuperCritical; }
  bool operator==(const Regime&) const = default;
};

std::string to_string(FlowKind k);
std::string to_string(FlowDirection d);

// |U^2 - gH| <= tol*gH classifies Critical. The analysis branches
// discontinuously at criticality, so the tolerance is tight by default.
Regime classify_regime(const FlowConfig& cfg, double tol = 1e-12);

// Eigen-structure of the symmetrized system. lambda1/lambda2 are the
// eigenvalues of Mtilde scaled by 1/(gH); S is orthonormal with columns
// [(lambda_i - U/g)/n_i, 1/n_i], n1 = c, n2 = d. lambda1 >= lambda2 always
// (lambda1 takes the + root).
struct SpectralData {
  FlowConfig cfg;
  double lambda1 = 0.0, lambda2 = 0.0;
  Mat2 S;
  double c = 0.0, d = 0.0;
};

SpectralData spectral_data(const FlowConfig& cfg);

// w = S^T q and back; S orthonormal so the inverse is the transpose.
Vec2 to_characteristic(const Vec2& q, const SpectralData& sd);
Vec2 from_characteristic(const Vec2& w, const SpectralData& sd);

struct ReflectionCoefficients {
  double gamma0 = 0.0, gamma1 = 0.0;
};

// Sub-critical transmissive reflection coefficients: the unique scalars making
// w1 - gamma0*w2 proportional to h + sqrt(H/g)u and w2 - gamma1*w1
// proportional to h - sqrt(H/g)u. Throws unless sub-critical; asserts the
// admissibility bounds gamma0^2 <= -lambda2/lambda1, gamma1^2 <= -lambda1/lambda2
// at construction.
ReflectionCoefficients reflection_coefficients(const FlowConfig& cfg);

struct BoundaryScalings {
  double kappa0 = 0.0, kappa1 = 0.0;
};

// Physical-to-characteristic data scalings: b1(t) = 2*kappa0*g1(t) and
// b2(t) = 2*kappa1*g2(t). Sub-critical defines both; critical defines the one
// matching the inflow side (kappa0 for U>0, kappa1 for U<0); super-critical
// data goes through the full (h,u) inflow map instead (see scenarios).
BoundaryScalings inflow_outflow_scalings(const FlowConfig& cfg);

}  // namespace swwe
