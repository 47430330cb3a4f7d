#include "ychan/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace ychan {

namespace {
constexpr double kPivotTol = 1e-9;
}

ThreeRateLp::ThreeRateLp(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) {
    throw std::invalid_argument("ThreeRateLp: constants must be finite");
  }
  if (!(a >= b && b >= c && c >= 0.0)) {
    throw std::invalid_argument("ThreeRateLp: requires a >= b >= c >= 0");
  }
}

ThreeRateSolution solve_closed_form(const ThreeRateLp& lp) {
  if (lp.a < lp.b + lp.c) {
    // All three constraints tight; a >= b >= c keeps every coordinate >= 0.
    return {0.5 * (lp.a + lp.b + lp.c),
            {0.5 * (lp.a - lp.b + lp.c), 0.5 * (lp.a + lp.b - lp.c),
             0.5 * (-lp.a + lp.b + lp.c)}};
  }
  return {lp.b + lp.c, {lp.c, lp.b, 0.0}};
}

namespace {

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (n == 0 || n > 16) {
    throw std::invalid_argument("solve_simplex: need 1..16 variables");
  }
  if (lp.constraints.empty()) {
    throw std::invalid_argument("solve_simplex: need at least one constraint");
  }
  for (const auto& row : lp.constraints) {
    if (row.coeff.size() != n) {
      throw std::invalid_argument("solve_simplex: row width mismatch");
    }
    if (!std::isfinite(row.rhs) || row.rhs < 0.0) {
      throw std::invalid_argument("solve_simplex: rhs must be finite and >= 0");
    }
    for (double v : row.coeff) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("solve_simplex: coefficients must be finite");
      }
    }
  }
}

}  // namespace

LpSolution solve_simplex(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.constraints.size();
  const std::size_t cols = n + m + 1;

  // Rows 0..m-1: [A | I | b]; row m: [-c | 0 | 0]. Slack basis is feasible
  // because b >= 0.
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = lp.constraints[i].coeff[j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = lp.constraints[i].rhs;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -lp.objective[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Bland's rule everywhere: smallest eligible column, and ties in the ratio
  // test broken by smallest basic variable index. Guarantees termination.
  for (long iter = 0; iter < 100000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j] < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == cols) {
      LpSolution sol;
      sol.point.assign(n, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) sol.point[basis[i]] = t[i][cols - 1];
      }
      sol.value = t[m][cols - 1];
      return sol;
    }

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > kPivotTol) {
        double ratio = t[i][cols - 1] / t[i][enter];
        if (ratio < best_ratio - kPivotTol ||
            (ratio < best_ratio + kPivotTol &&
             (leave == m || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) {
      throw std::runtime_error("solve_simplex: objective unbounded");
    }

    double piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  throw std::runtime_error("solve_simplex: iteration limit exceeded");
}

namespace {

// Gaussian elimination with partial pivoting; false when near-singular.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& out) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  out.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

std::vector<std::vector<double>> enumerate_vertices(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.objective.size();
  if (n > 8) {
    throw std::invalid_argument("enumerate_vertices: supports at most 8 variables");
  }

  // Full row set: the m inequality rows plus the n axis planes -x_i <= 0.
  std::vector<LinearProgram::Row> rows = lp.constraints;
  for (std::size_t i = 0; i < n; ++i) {
    LinearProgram::Row axis;
    axis.coeff.assign(n, 0.0);
    axis.coeff[i] = -1.0;
    axis.rhs = 0.0;
    rows.push_back(axis);
  }

  auto feasible = [&](const std::vector<double>& x) {
    for (const auto& row : rows) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) lhs += row.coeff[j] * x[j];
      if (lhs > row.rhs + kPivotTol) return false;
    }
    return true;
  };

  std::vector<std::vector<double>> vertices;
  auto record = [&](const std::vector<double>& x) {
    for (const auto& v : vertices) {
      double d = 0.0;
      for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(v[j] - x[j]));
      if (d < kPivotTol) return;
    }
    vertices.push_back(x);
  };

  std::vector<std::size_t> pick(n);
  const std::size_t total = rows.size();
  // Iterate over all n-subsets of rows in lexicographic order.
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rows[pick[i]].coeff;
      b[i] = rows[pick[i]].rhs;
    }
    std::vector<double> x;
    if (solve_square(a, b, x) && feasible(x)) record(x);

    // Advance the subset.
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (pick[k] + (n - k) < total) {
        ++pick[k];
        for (std::size_t j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (k == 0) return vertices;
    }
  }
}

}  // namespace ychan
