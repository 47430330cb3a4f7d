#pragma once

#include <vector>

#include "ychan/model.hpp"
#include "ychan/upper_bounds.hpp"

// Assembly of all per-rate constraint families into one polytope over the
// six rates, and sum-rate maximization over it.

namespace ychan {

struct RatePolytope {
  std::vector<RateConstraint> constraints;  // always 21 rows
  ChannelMode mode;

  bool feasible(const RateTuple& r, double tol = kTol) const;
};

// Families in fixed order: 6 single-user, 6 cut-set pairs, 3 broadcast
// pairs, 6 triples. Restricted mode only tightens triple right-hand sides.
RatePolytope build_outer_region(const ChannelGains& g, const PowerBudget& pw,
                                ChannelMode mode);

struct SumRateOptimum {
  double value;
  RateTuple argmax;
};

// Linear program max sum(r) over the polytope.
SumRateOptimum max_sum_rate(const RatePolytope& poly);

}  // namespace ychan
