#include "ychan/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ychan {

double cap(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("cap: argument must be finite and >= 0, got " +
                            std::to_string(x));
  }
  return 0.5 * std::log2(1.0 + x);
}

double cap_extended(double x) {
  if (!std::isfinite(x) || x <= -1.0) {
    throw std::domain_error("cap_extended: argument must be finite and > -1");
  }
  return 0.5 * std::log2(1.0 + x);
}

double clamp_plus(double x) { return x > 0.0 ? x : 0.0; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

ChannelGains::ChannelGains(std::array<double, 3> h, std::array<int, 3> perm)
    : h_(h), perm_(perm) {
  for (double v : h_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("ChannelGains: gains must be finite");
    }
  }
}

ChannelGains ChannelGains::ordered(double h1, double h2, double h3) {
  if (!(h1 * h1 >= h2 * h2 && h2 * h2 >= h3 * h3)) {
    throw std::invalid_argument(
        "ChannelGains::ordered: requires h1^2 >= h2^2 >= h3^2 "
        "(use canonicalized() to relabel)");
  }
  return ChannelGains({h1, h2, h3}, {1, 2, 3});
}

ChannelGains ChannelGains::canonicalized(double h1, double h2, double h3) {
  std::array<std::pair<double, int>, 3> tagged{
      {{h1, 1}, {h2, 2}, {h3, 3}}};
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& a, const auto& b) {
                     return a.first * a.first > b.first * b.first;
                   });
  return ChannelGains({tagged[0].first, tagged[1].first, tagged[2].first},
                      {tagged[0].second, tagged[1].second, tagged[2].second});
}

double ChannelGains::h(int user) const {
  if (user < 1 || user > 3) {
    throw std::invalid_argument("ChannelGains::h: user must be 1..3");
  }
  return h_[static_cast<std::size_t>(user - 1)];
}

double ChannelGains::h_sq(int user) const {
  double v = h(user);
  return v * v;
}

bool ChannelGains::was_permuted() const {
  return perm_ != std::array<int, 3>{1, 2, 3};
}

PowerBudget::PowerBudget(double p, double pr) : p_user(p), p_relay(pr) {
  if (!std::isfinite(p) || !std::isfinite(pr) || p < 0.0 || pr < 0.0) {
    throw std::invalid_argument(
        "PowerBudget: powers must be finite and >= 0");
  }
}

void validate_mode(ChannelMode mode, const ChannelGains& gains) {
  if (mode != ChannelMode::Symmetric) return;
  for (int u = 1; u <= 3; ++u) {
    if (std::abs(gains.h(u) - 1.0) > kTol) {
      throw std::invalid_argument(
          "Symmetric mode requires unit gains h1 = h2 = h3 = 1");
    }
  }
}

double RateTuple::sum() const {
  double s = 0.0;
  for (double v : r) s += v;
  return s;
}

namespace {
// (from, to) pairs in RateTuple order.
constexpr std::array<std::pair<int, int>, kNumRates> kPairs{
    {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}};
}  // namespace

int rate_index(int from, int to) {
  for (int i = 0; i < kNumRates; ++i) {
    if (kPairs[static_cast<std::size_t>(i)] == std::pair<int, int>{from, to}) {
      return i;
    }
  }
  throw std::invalid_argument("rate_index: invalid user pair");
}

std::pair<int, int> rate_pair(int index) {
  if (index < 0 || index >= kNumRates) {
    throw std::invalid_argument("rate_pair: index out of range");
  }
  return kPairs[static_cast<std::size_t>(index)];
}

}  // namespace ychan
