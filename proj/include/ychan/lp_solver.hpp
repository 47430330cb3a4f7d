#pragma once

#include <array>
#include <vector>

// Small dense linear programming: a closed-form solver for the three-rate
// relay-downlink program and a generic simplex for the full rate polytope.
// Everything here assumes maximization over x >= 0 with Ax <= b, b >= 0,
// so the origin is always feasible and no phase-1 is needed.

namespace ychan {

// max x+y+z subject to x+y <= a, y+z <= b, z+x <= c, x,y,z >= 0,
// with the constants ordered a >= b >= c >= 0. Construction validates.
struct ThreeRateLp {
  double a;
  double b;
  double c;
  ThreeRateLp(double a_, double b_, double c_);
};

struct ThreeRateSolution {
  double value;
  std::array<double, 3> point;  // an attaining (x, y, z)
};

// Closed form: value = min{(a+b+c)/2, b+c}. When a < b+c the optimum is the
// interior corner ((a-b+c)/2, (a+b-c)/2, (-a+b+c)/2); otherwise (c, b, 0).
ThreeRateSolution solve_closed_form(const ThreeRateLp& lp);

struct LinearProgram {
  std::vector<double> objective;  // maximize objective . x
  struct Row {
    std::vector<double> coeff;
    double rhs;  // must be >= 0
  };
  std::vector<Row> constraints;
};

struct LpSolution {
  double value;
  std::vector<double> point;
};

// Dense tableau simplex with Bland's smallest-index rule (pivot tolerance
// 1e-9). Supports up to 16 variables. Throws std::invalid_argument on
// malformed input and std::runtime_error if the program is unbounded.
LpSolution solve_simplex(const LinearProgram& lp);

// Brute-force vertex oracle for n <= 8: every n-subset of the constraint
// rows (including the axis planes x_i >= 0) is intersected and kept when
// feasible. Vertices are deduplicated within tolerance.
std::vector<std::vector<double>> enumerate_vertices(const LinearProgram& lp);

}  // namespace ychan
