#pragma once

#include <string>

#include "ychan/model.hpp"

// Achievability side: the three sum-rate lower bounds. All three are defined
// for arbitrary (P, Pr) pairs. Lattice-coded streams boost the per-stream
// power by 3/2 (two streams alternate over three slots), which is where the
// cap(3 h^2 P / 2 - 1/2) terms come from; the -1/2 self-noise term is clamped
// through [.]^+ before use.

namespace ychan {

// Complete decode-and-forward: the relay decodes everything it forwards.
// min of the uplink MAC sum and the downlink three-rate program value.
double sum_lower_cdf(const ChannelGains& g, const PowerBudget& pw);

// Functional decode-and-forward over all three user pairs:
// (2/3) min{[cap(3 h2^2 P / 2 - 1/2)]^+, cap(h2^2 Pr)}
// + (4/3) min{[cap(3 h3^2 P / 2 - 1/2)]^+, cap(h3^2 Pr)}.
double sum_lower_fdf(const ChannelGains& g, const PowerBudget& pw);

// Functional decode-and-forward serving only the strongest pair {1,2}:
// 2 min{[cap(h2^2 P - 1/2)]^+, cap(h2^2 Pr)}.
double sum_lower_fdf_two_user(const ChannelGains& g, const PowerBudget& pw);

// All three bounds plus which side of each min was active.
struct LowerBoundReport {
  double c_cdf;
  double c_fdf;
  double c_fdf2;
  double best;
  std::string binding_cdf;   // "uplink_mac" | "relay_pair_sum" | "relay_half_sum"
  std::string binding_fdf;   // "pair12:<side> pair13/23:<side>", side uplink|downlink
  std::string binding_fdf2;  // "uplink" | "downlink"
};
LowerBoundReport lower_bound_report(const ChannelGains& g,
                                    const PowerBudget& pw);

}  // namespace ychan
