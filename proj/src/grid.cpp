#include "swwe/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swwe {

double Grid::min_width() const {
  return *std::min_element(widths.begin(), widths.end());
}

static Grid finish_grid(int N, double L, std::vector<double> widths) {
  Grid g;
  g.N = N;
  g.L = L;
  g.widths = std::move(widths);
  g.x.resize(N + 1);
  g.x[0] = 0.0;
  for (int i = 0; i < N; ++i) g.x[i + 1] = g.x[i] + g.widths[i];
  g.x[N] = L;  // pin the right endpoint against accumulated round-off
  g.vol.resize(N + 1);
  g.vol[0] = 0.5 * g.widths[0];
  g.vol[N] = 0.5 * g.widths[N - 1];
  for (int i = 1; i < N; ++i) g.vol[i] = 0.5 * (g.widths[i - 1] + g.widths[i]);
  return g;
}

Grid build_grid(int N, double L) {
  if (N < 2) throw std::invalid_argument("build_grid: need N >= 2");
  if (!(L > 0.0)) throw std::invalid_argument("build_grid: need L > 0");
  // x_i = i*L/N evaluated directly keeps nodes exactly evenly spaced
  std::vector<double> widths(N);
  Grid g;
  g.N = N;
  g.L = L;
  g.x.resize(N + 1);
  for (int i = 0; i <= N; ++i) g.x[i] = L * static_cast<double>(i) / N;
  for (int i = 0; i < N; ++i) widths[i] = g.x[i + 1] - g.x[i];
  g.widths = std::move(widths);
  g.vol.resize(N + 1);
  g.vol[0] = 0.5 * g.widths[0];
  g.vol[N] = 0.5 * g.widths[N - 1];
  for (int i = 1; i < N; ++i) g.vol[i] = 0.5 * (g.widths[i - 1] + g.widths[i]);
  return g;
}

Grid build_grid(const std::vector<double>& widths) {
  const int N = static_cast<int>(widths.size());
  if (N < 2) throw std::invalid_argument("build_grid: need at least 2 widths");
  for (double w : widths)
    if (!(w > 0.0)) throw std::invalid_argument("build_grid: widths must be positive");
  const double L = std::accumulate(widths.begin(), widths.end(), 0.0);
  return finish_grid(N, L, widths);
}

void SbpOperators::apply_Q(const double* v, double* out) const {
  const int n = grid.nodes();
  out[0] = 0.5 * (v[1] - v[0]);
  for (int i = 1; i < n - 1; ++i) out[i] = 0.5 * (v[i + 1] - v[i - 1]);
  out[n - 1] = 0.5 * (v[n - 1] - v[n - 2]);
}

void SbpOperators::apply_A(const double* v, double* out) const {
  const int n = grid.nodes();
  out[0] = v[1] - v[0];
  for (int i = 1; i < n - 1; ++i) out[i] = v[i - 1] - 2.0 * v[i] + v[i + 1];
  out[n - 1] = v[n - 2] - v[n - 1];
}

void SbpOperators::apply_Dx(const double* v, double* out) const {
  apply_Q(v, out);
  const int n = grid.nodes();
  for (int i = 0; i < n; ++i) out[i] /= grid.vol[i];
}

std::vector<double> SbpOperators::apply_Q(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != grid.nodes())
    throw std::invalid_argument("apply_Q: length mismatch");
  std::vector<double> out(v.size());
  apply_Q(v.data(), out.data());
  return out;
}

std::vector<double> SbpOperators::apply_A(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != grid.nodes())
    throw std::invalid_argument("apply_A: length mismatch");
  std::vector<double> out(v.size());
  apply_A(v.data(), out.data());
  return out;
}

std::vector<double> SbpOperators::apply_Dx(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != grid.nodes())
    throw std::invalid_argument("apply_Dx: length mismatch");
  std::vector<double> out(v.size());
  apply_Dx(v.data(), out.data());
  return out;
}

SbpOperators build_operators(const Grid& grid, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("build_operators: alpha must be >= 0");
  return SbpOperators{grid, alpha};
}

std::vector<double> dense_Q(int n) {
  std::vector<double> Q(static_cast<size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return Q[static_cast<size_t>(i) * n + j]; };
  at(0, 0) = -0.5; at(0, 1) = 0.5;
  for (int i = 1; i < n - 1; ++i) { at(i, i - 1) = -0.5; at(i, i + 1) = 0.5; }
  at(n - 1, n - 2) = -0.5; at(n - 1, n - 1) = 0.5;
  return Q;
}

std::vector<double> dense_A(int n) {
  std::vector<double> A(static_cast<size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return A[static_cast<size_t>(i) * n + j]; };
  at(0, 0) = -1.0; at(0, 1) = 1.0;
  for (int i = 1; i < n - 1; ++i) { at(i, i - 1) = 1.0; at(i, i) = -2.0; at(i, i + 1) = 1.0; }
  at(n - 1, n - 2) = 1.0; at(n - 1, n - 1) = -1.0;
  return A;
}

std::vector<double> dense_P(const Grid& grid) {
  const int n = grid.nodes();
  std::vector<double> P(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) P[static_cast<size_t>(i) * n + i] = grid.vol[i];
  return P;
}

}  // namespace swwe
