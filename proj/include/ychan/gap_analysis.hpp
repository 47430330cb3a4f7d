#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ychan/model.hpp"

// Distance between the converse and achievability sides: per-instance gap
// reports with their analytic caps, the symmetric-channel gap, and a seeded
// randomized certifier for the five constant-gap claims.

namespace ychan {

// LowPower iff h2^2 P <= 1/2 (boundary inclusive).
enum class PowerRegime { LowPower, HighPower };

PowerRegime classify_regime(const ChannelGains& g, double p_user);

// Analytic caps on the high-power additive gap as functions of x = h2^2 P.
// Both are decreasing in x; limits 3/2 and 1 as x -> inf.
double additive_cap_high_general(double h2_sq_p);     // log2(2 + 1/x) + 1/2
double additive_cap_high_restricted(double h2_sq_p);  // log2(2 + 1/x)

struct GapReport {
  PowerRegime regime;
  double upper;
  double lower;
  double additive_gap;
  // Empty when the lower bound is zero (P == 0 or h2 == 0 in low power).
  std::optional<double> multiplicative_gap;
  double analytic_cap;  // what additive_gap is guaranteed not to exceed
  std::string upper_used;
  std::string lower_used;
};

// Equal powers required (P == Pr). Low power pairs sum_upper_cutset with
// sum_lower_cdf (cap log2(3/2)); high power pairs sum_upper_general with
// sum_lower_fdf_two_user (cap min{5/2, additive_cap_high_general}), or the
// restricted upper bound and cap min{2, additive_cap_high_restricted} in
// Restricted mode.
GapReport gap(const ChannelGains& g, const PowerBudget& pw, ChannelMode mode);

// Symmetric channel h = (1,1,1), powers independent:
// min{c_cs, c_s, c_g} - max{c_cdf, c_fdf, c_fdf2}.
double symmetric_gap(const PowerBudget& pw);

// Sampling domain for certification. Powers are drawn log-uniform in dB,
// gain magnitudes log-uniform in dB with random signs, then canonicalized.
// fixed_gains pins the channel (only the power stays random).
struct SampleSpec {
  double power_db_min = -30.0;
  double power_db_max = 60.0;
  double gain_db_min = -20.0;
  double gain_db_max = 20.0;
  std::optional<std::array<double, 3>> fixed_gains;
};

struct Witness {
  double h1 = 1.0, h2 = 1.0, h3 = 1.0;
  double p = 0.0, pr = 0.0;
};

struct ClaimResult {
  std::string claim;
  double bound;
  double max_observed;
  Witness witness;      // instance attaining max_observed
  std::uint64_t samples;  // trials that fed this claim
  bool pass;
};

struct GapCertificate {
  std::uint64_t trials;
  std::uint64_t seed;
  std::vector<ClaimResult> claims;
  bool all_pass;

  std::string to_json(int indent = 2) const;
};

// Five claims over `trials` instances: multiplicative <= 3, low-power
// additive <= log2(3/2), high-power additive <= 5/2 (general) and <= 2
// (restricted), symmetric equal-power gap <= 1. Per-trial sub-seeds are
// derived by index so results are independent of evaluation order, and each
// witness replays bit-exactly through gap()/symmetric_gap(). Instances with
// a zero lower bound are excluded from the multiplicative claim.
GapCertificate certify_gaps(const SampleSpec& spec, std::uint64_t trials,
                            std::uint64_t seed);

}  // namespace ychan
