#include "ychan/upper_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace ychan {

double RateConstraint::lhs(const RateTuple& r) const {
  double s = 0.0;
  for (int i = 0; i < kNumRates; ++i) s += coeff[static_cast<std::size_t>(i)] * r[i];
  return s;
}

bool RateConstraint::satisfied(const RateTuple& r, double tol) const {
  return lhs(r) <= rhs + tol;
}

namespace {

RateConstraint make(std::initializer_list<std::pair<int, int>> rates,
                    double rhs, std::string label) {
  RateConstraint c;
  for (auto [from, to] : rates) {
    c.coeff[static_cast<std::size_t>(rate_index(from, to))] = 1.0;
  }
  c.rhs = rhs;
  c.label = std::move(label);
  return c;
}

// The two users other than j, in increasing order.
std::pair<int, int> others(int j) {
  switch (j) {
    case 1: return {2, 3};
    case 2: return {1, 3};
    default: return {1, 2};
  }
}

void require_equal_powers(const PowerBudget& pw, const char* fn) {
  if (!pw.equal_powers()) {
    throw std::invalid_argument(std::string(fn) +
                                ": defined only for equal powers (P == Pr)");
  }
}

}  // namespace

std::vector<RateConstraint> single_user_bounds(const ChannelGains& g,
                                               const PowerBudget& pw) {
  std::vector<RateConstraint> out;
  out.reserve(kNumRates);
  for (int i = 0; i < kNumRates; ++i) {
    auto [j, k] = rate_pair(i);
    double rhs = std::min(cap(g.h_sq(j) * pw.p_user),
                          cap(g.h_sq(k) * pw.p_relay));
    out.push_back(make({{j, k}}, rhs,
                       "single_user r" + std::to_string(j) + std::to_string(k)));
  }
  return out;
}

std::vector<RateConstraint> cutset_pair_bounds(const ChannelGains& g,
                                               const PowerBudget& pw) {
  std::vector<RateConstraint> out;
  out.reserve(6);
  for (int j = 1; j <= 3; ++j) {
    auto [k, l] = others(j);
    // Uplink cut around source j: the relay must carry both of j's streams.
    double rhs = cap(std::min(g.h_sq(j) * pw.p_user,
                              (g.h_sq(k) + g.h_sq(l)) * pw.p_relay));
    out.push_back(make({{j, k}, {j, l}}, rhs,
                       "cutset_uplink j=" + std::to_string(j)));
  }
  for (int l = 1; l <= 3; ++l) {
    auto [j, k] = others(l);
    // Downlink cut around sink l: full cooperation of the two sources.
    double hj = std::abs(g.h(j));
    double hk = std::abs(g.h(k));
    double rhs = cap(std::min((hj + hk) * (hj + hk) * pw.p_user,
                              g.h_sq(l) * pw.p_relay));
    out.push_back(make({{j, l}, {k, l}}, rhs,
                       "cutset_downlink l=" + std::to_string(l)));
  }
  return out;
}

std::vector<RateConstraint> bc_pair_bounds(const ChannelGains& g,
                                           const PowerBudget& pw) {
  // Relay broadcast to the two sinks of source j; the stronger remaining
  // receiver limits the pair. Destinations of 1 are {2,3} (stronger h2);
  // destinations of 2 and of 3 both include user 1 (stronger h1).
  std::vector<RateConstraint> out;
  out.reserve(3);
  out.push_back(make({{1, 2}, {1, 3}}, cap(g.h_sq(2) * pw.p_relay), "bc_pair j=1"));
  out.push_back(make({{2, 1}, {2, 3}}, cap(g.h_sq(1) * pw.p_relay), "bc_pair j=2"));
  out.push_back(make({{3, 1}, {3, 2}}, cap(g.h_sq(1) * pw.p_relay), "bc_pair j=3"));
  return out;
}

std::vector<RateConstraint> triple_bounds(const ChannelGains& g,
                                          const PowerBudget& pw,
                                          ChannelMode mode) {
  std::vector<RateConstraint> out;
  out.reserve(6);
  for (int j = 1; j <= 3; ++j) {
    auto [a, b] = others(j);
    for (auto [k, l] : {std::pair{a, b}, std::pair{b, a}}) {
      double rhs = cap((g.h_sq(j) + g.h_sq(l)) * pw.p_relay);
      double hk = std::abs(g.h(k));
      double hl = std::abs(g.h(l));
      rhs = std::min(rhs, cap((hk + hl) * (hk + hl) * pw.p_user));
      if (mode == ChannelMode::Restricted) {
        // Without feedback the sources cannot cohere; independent inputs
        // tighten the cooperation term.
        rhs = std::min(rhs, cap((g.h_sq(k) + g.h_sq(l)) * pw.p_user));
      }
      out.push_back(make({{k, j}, {l, j}, {k, l}}, rhs,
                         "triple j=" + std::to_string(j) + " k=" +
                             std::to_string(k) + " l=" + std::to_string(l)));
    }
  }
  return out;
}

double sum_upper_cutset(const ChannelGains& g, const PowerBudget& pw) {
  require_equal_powers(pw, "sum_upper_cutset");
  double p = pw.p_user;
  return 2.0 * cap(g.h_sq(2) * p) + cap(g.h_sq(3) * p);
}

double sum_upper_general(const ChannelGains& g, const PowerBudget& pw) {
  require_equal_powers(pw, "sum_upper_general");
  double p = pw.p_user;
  double h2 = std::abs(g.h(2));
  double h3 = std::abs(g.h(3));
  double coop = std::min((g.h_sq(1) + g.h_sq(3)) * p, (h2 + h3) * (h2 + h3) * p);
  return cap((g.h_sq(2) + g.h_sq(3)) * p) + cap(coop);
}

double sum_upper_restricted(const ChannelGains& g, const PowerBudget& pw) {
  require_equal_powers(pw, "sum_upper_restricted");
  return 2.0 * cap((g.h_sq(2) + g.h_sq(3)) * pw.p_user);
}

SymmetricUppers symmetric_uppers(const PowerBudget& pw) {
  SymmetricUppers u;
  u.c_cs = 3.0 * std::min(cap(pw.p_user), cap(pw.p_relay));
  u.c_s = 2.0 * cap(2.0 * pw.p_relay);
  u.c_g = 2.0 * cap(4.0 * pw.p_user);
  return u;
}

}  // namespace ychan
