#include "ychan/lower_bounds.hpp"

#include <algorithm>

#include "ychan/lp_solver.hpp"

namespace ychan {

namespace {

// min{[cap(boost * h^2 P - 1/2)]^+, cap(h^2 Pr)}; side reports which arm won.
double paired_stream_rate(double h_sq, const PowerBudget& pw, double boost,
                          const char** side) {
  double up = clamp_plus(cap_extended(boost * h_sq * pw.p_user - 0.5));
  double down = cap(h_sq * pw.p_relay);
  *side = up <= down ? "uplink" : "downlink";
  return std::min(up, down);
}

}  // namespace

double sum_lower_cdf(const ChannelGains& g, const PowerBudget& pw) {
  double mac = cap((g.h_sq(1) + g.h_sq(2) + g.h_sq(3)) * pw.p_user);
  ThreeRateLp lp(cap(g.h_sq(1) * pw.p_relay), cap(g.h_sq(2) * pw.p_relay),
                 cap(g.h_sq(3) * pw.p_relay));
  return std::min(mac, solve_closed_form(lp).value);
}

double sum_lower_fdf(const ChannelGains& g, const PowerBudget& pw) {
  const char* side;
  double t2 = paired_stream_rate(g.h_sq(2), pw, 1.5, &side);
  double t3 = paired_stream_rate(g.h_sq(3), pw, 1.5, &side);
  return (2.0 / 3.0) * t2 + (4.0 / 3.0) * t3;
}

double sum_lower_fdf_two_user(const ChannelGains& g, const PowerBudget& pw) {
  const char* side;
  return 2.0 * paired_stream_rate(g.h_sq(2), pw, 1.0, &side);
}

LowerBoundReport lower_bound_report(const ChannelGains& g,
                                    const PowerBudget& pw) {
  LowerBoundReport rep;

  double mac = cap((g.h_sq(1) + g.h_sq(2) + g.h_sq(3)) * pw.p_user);
  double a = cap(g.h_sq(1) * pw.p_relay);
  double b = cap(g.h_sq(2) * pw.p_relay);
  double c = cap(g.h_sq(3) * pw.p_relay);
  double lp = solve_closed_form(ThreeRateLp(a, b, c)).value;
  rep.c_cdf = std::min(mac, lp);
  if (mac <= lp) {
    rep.binding_cdf = "uplink_mac";
  } else {
    rep.binding_cdf = a >= b + c ? "relay_pair_sum" : "relay_half_sum";
  }

  const char* side2;
  const char* side3;
  double t2 = paired_stream_rate(g.h_sq(2), pw, 1.5, &side2);
  double t3 = paired_stream_rate(g.h_sq(3), pw, 1.5, &side3);
  rep.c_fdf = (2.0 / 3.0) * t2 + (4.0 / 3.0) * t3;
  rep.binding_fdf =
      std::string("pair12:") + side2 + " pair13/23:" + side3;

  const char* side;
  rep.c_fdf2 = 2.0 * paired_stream_rate(g.h_sq(2), pw, 1.0, &side);
  rep.binding_fdf2 = side;

  rep.best = std::max({rep.c_cdf, rep.c_fdf, rep.c_fdf2});
  return rep;
}

}  // namespace ychan
