#include "ychan/outer_region.hpp"

#include <iterator>

#include "ychan/lp_solver.hpp"

namespace ychan {

bool RatePolytope::feasible(const RateTuple& r, double tol) const {
  for (int i = 0; i < kNumRates; ++i) {
    if (r[i] < -tol) return false;
  }
  for (const auto& c : constraints) {
    if (!c.satisfied(r, tol)) return false;
  }
  return true;
}

RatePolytope build_outer_region(const ChannelGains& g, const PowerBudget& pw,
                                ChannelMode mode) {
  validate_mode(mode, g);
  RatePolytope poly;
  poly.mode = mode;
  auto append = [&poly](std::vector<RateConstraint> v) {
    poly.constraints.insert(poly.constraints.end(),
                            std::make_move_iterator(v.begin()),
                            std::make_move_iterator(v.end()));
  };
  append(single_user_bounds(g, pw));
  append(cutset_pair_bounds(g, pw));
  append(bc_pair_bounds(g, pw));
  append(triple_bounds(g, pw, mode));
  return poly;
}

SumRateOptimum max_sum_rate(const RatePolytope& poly) {
  LinearProgram lp;
  lp.objective.assign(kNumRates, 1.0);
  lp.constraints.reserve(poly.constraints.size());
  for (const auto& c : poly.constraints) {
    lp.constraints.push_back(
        {{c.coeff.begin(), c.coeff.end()}, c.rhs});
  }
  LpSolution sol = solve_simplex(lp);
  SumRateOptimum out;
  out.value = sol.value;
  for (int i = 0; i < kNumRates; ++i) {
    out.argmax[i] = sol.point[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace ychan
