#pragma once

#include <array>
#include <cstddef>
#include <utility>

// Shared vocabulary for the three-user relay network: the capacity function,
// dB conversion, validated channel gains, power budgets, and the fixed
// ordering of the six unicast rates.

namespace ychan {

// C(x) = (1/2) * log2(1 + x), bits per channel use. Throws std::domain_error
// for x < 0 or non-finite x.
double cap(double x);

// Same function extended to x > -1. Only intended as the argument of
// clamp_plus() in the lattice-coding rate expressions; may return negatives.
double cap_extended(double x);

// [x]^+ = max{0, x}.
double clamp_plus(double x);

// 10^(db/10).
double db_to_linear(double db);

enum class ChannelMode { General, Restricted, Symmetric };

// Gains ordered so that h1^2 >= h2^2 >= h3^2. Construction either rejects
// unordered input or canonicalizes it while recording the permutation.
class ChannelGains {
 public:
  // Throws std::invalid_argument unless h1^2 >= h2^2 >= h3^2.
  static ChannelGains ordered(double h1, double h2, double h3);

  // Relabels users so the invariant holds. permutation()[i] is the original
  // 1-based user index of the gain now called h(i+1).
  static ChannelGains canonicalized(double h1, double h2, double h3);

  double h1() const { return h_[0]; }
  double h2() const { return h_[1]; }
  double h3() const { return h_[2]; }
  double h(int user) const;     // user in 1..3
  double h_sq(int user) const;  // h(user)^2

  const std::array<int, 3>& permutation() const { return perm_; }
  bool was_permuted() const;

 private:
  ChannelGains(std::array<double, 3> h, std::array<int, 3> perm);
  std::array<double, 3> h_;
  std::array<int, 3> perm_;
};

// Per-node transmit powers. Non-negative and finite; throws otherwise.
struct PowerBudget {
  double p_user;
  double p_relay;
  PowerBudget(double p, double pr);
  bool equal_powers() const { return p_user == p_relay; }
};

// Throws std::invalid_argument when mode is Symmetric but the gains are not
// (1, 1, 1) within tolerance.
void validate_mode(ChannelMode mode, const ChannelGains& gains);

constexpr int kNumRates = 6;

// Rates are always ordered (r12, r13, r21, r23, r31, r32).
struct RateTuple {
  std::array<double, kNumRates> r{};

  double sum() const;
  double operator[](int i) const { return r[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return r[static_cast<std::size_t>(i)]; }
};

// Index of r_{from,to} in RateTuple order; throws for invalid pairs.
int rate_index(int from, int to);

// Inverse of rate_index.
std::pair<int, int> rate_pair(int index);

// Tolerance used for every equality-style check in this library.
inline constexpr double kTol = 1e-9;

}  // namespace ychan
