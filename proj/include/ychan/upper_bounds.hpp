#pragma once

#include <array>
#include <string>
#include <vector>

#include "ychan/model.hpp"

// Converse side: every per-rate constraint family on the six unicast rates,
// plus the three closed-form sum-rate upper bounds (equal powers only) and
// their symmetric-channel specializations.

namespace ychan {

// One inequality coeff . r <= rhs over (r12, r13, r21, r23, r31, r32).
// Coefficients are 0/1 selectors.
struct RateConstraint {
  std::array<double, kNumRates> coeff{};
  double rhs = 0.0;
  std::string label;

  double lhs(const RateTuple& r) const;
  bool satisfied(const RateTuple& r, double tol = kTol) const;
};

// r_jk <= min{cap(h_j^2 P), cap(h_k^2 Pr)}: source uplink and destination
// downlink, six constraints.
std::vector<RateConstraint> single_user_bounds(const ChannelGains& g,
                                               const PowerBudget& pw);

// Cut-set pairs. Uplink at source j: r_jk + r_jl <= cap(min{h_j^2 P,
// (h_k^2 + h_l^2) Pr}). Downlink at sink l: r_jl + r_kl <=
// cap(min{(|h_j| + |h_k|)^2 P, h_l^2 Pr}). Six constraints.
std::vector<RateConstraint> cutset_pair_bounds(const ChannelGains& g,
                                               const PowerBudget& pw);

// Relay-broadcast pairs sharing a source: r12 + r13 <= cap(h2^2 Pr),
// r21 + r23 <= cap(h1^2 Pr), r31 + r32 <= cap(h1^2 Pr). The binding gain is
// the stronger remaining receiver. Three constraints.
std::vector<RateConstraint> bc_pair_bounds(const ChannelGains& g,
                                           const PowerBudget& pw);

// Genie-aided triples r_kj + r_lj + r_kl for each middle user j (both
// orientations of the side pair): rhs = min of a relay-downlink term
// cap((h_j^2 + h_l^2) Pr) and a source-cooperation term
// cap((|h_k| + |h_l|)^2 P); Restricted mode adds the independent-input term
// cap((h_k^2 + h_l^2) P) to the min. Six constraints.
std::vector<RateConstraint> triple_bounds(const ChannelGains& g,
                                          const PowerBudget& pw,
                                          ChannelMode mode);

// Closed-form sum-rate upper bounds; all three require equal powers
// (P == Pr) and throw std::invalid_argument otherwise.
double sum_upper_cutset(const ChannelGains& g, const PowerBudget& pw);
double sum_upper_general(const ChannelGains& g, const PowerBudget& pw);
double sum_upper_restricted(const ChannelGains& g, const PowerBudget& pw);

// Symmetric channel h = (1,1,1); powers may differ.
struct SymmetricUppers {
  double c_cs;  // 3 * min{cap(P), cap(Pr)}
  double c_s;   // 2 * cap(2 Pr)
  double c_g;   // 2 * cap(4 P)
};
SymmetricUppers symmetric_uppers(const PowerBudget& pw);

}  // namespace ychan
