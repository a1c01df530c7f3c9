#pragma once

#include <vector>

namespace swwe {

// Finite volume grid on [0, L]: N intervals, N+1 nodes. Control volumes are
// the duals: half cells at the two boundary nodes.
struct Grid {
  int N = 0;        // interval count (nodes = N+1)
  double L = 0.0;   // domain length
  std::vector<double> x;       // node positions, x[0]=0, x[N]=L
  std::vector<double> widths;  // interval widths, size N
  std::vector<double> vol;     // control volumes |I_0|..|I_N|, size N+1

  int nodes() const { return N + 1; }
  double min_width() const;
};

Grid build_grid(int N, double L);                    // uniform spacing
Grid build_grid(const std::vector<double>& widths);  // explicit widths, L = sum

// The P/Q/A operators. Q and A are the fixed stencils regardless of spacing;
// P is the diagonal of control volumes. Stored matrix-free; dense forms are
// for test oracles only.
struct SbpOperators {
  Grid grid;
  double alpha = 0.0;  // dissipation strength [m/s], >= 0

  // out = Q v;  rows: (-1/2, 1/2), (-1/2, 0, 1/2), (-1/2, 1/2)
  void apply_Q(const double* v, double* out) const;
  // out = A v;  rows: (-1, 1), (1, -2, 1), (1, -1); symmetric, A <= 0
  void apply_A(const double* v, double* out) const;
  // out = P^{-1} Q v  (the first-derivative approximation D_x)
  void apply_Dx(const double* v, double* out) const;

  std::vector<double> apply_Q(const std::vector<double>& v) const;
  std::vector<double> apply_A(const std::vector<double>& v) const;
  std::vector<double> apply_Dx(const std::vector<double>& v) const;
};

SbpOperators build_operators(const Grid& grid, double alpha);

// Dense materializations (row-major n x n) for test oracles.
std::vector<double> dense_Q(int n);
std::vector<double> dense_A(int n);
std::vector<double> dense_P(const Grid& grid);

}  // namespace swwe
