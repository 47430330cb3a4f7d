// Acceptance suite: one independently runnable check per numbered criterion,
// one [PASS]/[FAIL] line each with the measured values. Run all criteria by
// default, or a single one with --only N. Exit code is the number of failed
// criteria (capped at 1 for shells that truncate).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ychan/fdf_protocol.hpp"
#include "ychan/gap_analysis.hpp"
#include "ychan/lower_bounds.hpp"
#include "ychan/lp_solver.hpp"
#include "ychan/model.hpp"
#include "ychan/outer_region.hpp"
#include "ychan/upper_bounds.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  bool pass = true;
  std::ostringstream detail;

  void fail() { pass = false; }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------- 1 --

bool criterion_1() {
  auto t0 = Clock::now();
  ychan::ChannelGains g = ychan::ChannelGains::ordered(1.0, 0.8, 0.7);
  Line line;

  // (a) the genie bound crosses below the cut-set bound exactly once.
  int transitions = 0;
  bool prev_below = false;
  double crossover_db = -1.0;
  for (int snr = 0; snr <= 50; ++snr) {
    double p = ychan::db_to_linear(snr);
    ychan::PowerBudget pw(p, p);
    bool below =
        ychan::sum_upper_general(g, pw) < ychan::sum_upper_cutset(g, pw);
    if (snr > 0 && below != prev_below) {
      ++transitions;
      if (below) crossover_db = snr;
    }
    prev_below = below;
  }
  bool a_ok = transitions == 1 && prev_below;
  if (a_ok) {
    line.detail << "(a) single crossover at " << crossover_db << " dB: ok";
  } else {
    line.fail();
    line.detail << "(a) expected one crossover, saw " << transitions
                << " transitions";
  }

  // (b) the two-sided comparison against the analytic expression at 50 dB.
  {
    double p = ychan::db_to_linear(50.0);
    ychan::PowerBudget pw(p, p);
    double measured =
        ychan::sum_upper_general(g, pw) - ychan::sum_lower_fdf_two_user(g, pw);
    double analytic = ychan::additive_cap_high_general(g.h_sq(2) * p);
    double diff = std::abs(measured - analytic);
    if (diff <= 0.05) {
      line.detail << "; (b) 50 dB gap " << fmt(measured) << " within 0.05 of "
                  << fmt(analytic) << ": ok";
    } else {
      line.fail();
      line.detail << "; (b) 50 dB gap " << fmt(measured) << " vs analytic "
                  << fmt(analytic) << ", |diff| " << fmt(diff)
                  << " > 0.05 (one-sided gap <= analytic does hold: "
                  << (measured <= analytic + 1e-9 ? "yes" : "no") << ")";
    }
  }

  // (c) the 20 dB tuple against the reference values.
  {
    double p = ychan::db_to_linear(20.0);
    ychan::PowerBudget pw(p, p);
    double got[5] = {ychan::sum_upper_cutset(g, pw),
                     ychan::sum_upper_general(g, pw),
                     ychan::sum_lower_cdf(g, pw), ychan::sum_lower_fdf(g, pw),
                     ychan::sum_lower_fdf_two_user(g, pw)};
    const double want[5] = {8.8443, 7.0309, 3.8707, 5.7701, 6.0112};
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
    if (worst <= 1e-3) {
      line.detail << "; (c) 20 dB tuple within 1e-3 (worst " << fmt(worst)
                  << "): ok";
    } else {
      line.fail();
      line.detail << "; (c) 20 dB tuple off by " << fmt(worst) << " > 1e-3";
    }
  }

  double dt = seconds_since(t0);
  if (dt >= 1.0) {
    line.fail();
    line.detail << "; runtime " << fmt(dt) << " s >= 1 s";
  }
  std::printf("[%s] criterion 1: curve reproduction sweep 0-50 dB: %s; %.3f s\n",
              line.pass ? "PASS" : "FAIL", line.detail.str().c_str(), dt);
  return line.pass;
}

// ------------------------------------------------------------------- 2, 3 --

bool criterion_2() {
  auto t0 = Clock::now();
  ychan::SampleSpec spec;  // P in [-30, 60] dB, gains in [-20, 20] dB
  ychan::GapCertificate cert = ychan::certify_gaps(spec, 100000, 20260819);
  bool pass = true;
  std::ostringstream detail;
  for (const auto& c : cert.claims) {
    if (c.claim == "multiplicative_le_3" ||
        c.claim == "additive_low_power_le_log2_3_2" ||
        c.claim == "additive_high_power_general_le_5_2") {
      pass = pass && c.pass;
      detail << c.claim << " max " << fmt(c.max_observed) << " vs "
             << fmt(c.bound) << (c.pass ? " ok; " : " VIOLATED; ");
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 30.0) {
    pass = false;
    detail << "runtime " << fmt(dt) << " s >= 30 s; ";
  }
  std::printf("[%s] criterion 2: general-mode certification, 1e5 instances: %s%.2f s\n",
              pass ? "PASS" : "FAIL", detail.str().c_str(), dt);
  return pass;
}

bool criterion_3() {
  auto t0 = Clock::now();
  ychan::SampleSpec spec;
  ychan::GapCertificate cert = ychan::certify_gaps(spec, 100000, 20260819);
  bool pass = true;
  std::ostringstream detail;
  for (const auto& c : cert.claims) {
    if (c.claim == "additive_high_power_restricted_le_2") {
      pass = pass && c.pass;
      detail << "restricted high-power max " << fmt(c.max_observed) << " vs "
             << fmt(c.bound) << (c.pass ? " ok; " : " VIOLATED; ");
    }
  }

  // Dominance of the general bound over the restricted one, per instance.
  std::mt19937_64 rng(915);
  auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double worst = -1e300;
  for (int i = 0; i < 100000; ++i) {
    double p = std::pow(10.0, (90.0 * u() - 30.0) / 10.0);
    double h[3];
    for (auto& v : h) {
      double mag = std::pow(10.0, (40.0 * u() - 20.0) / 20.0);
      v = (rng() & 1) ? -mag : mag;
    }
    ychan::ChannelGains g = ychan::ChannelGains::canonicalized(h[0], h[1], h[2]);
    ychan::PowerBudget pw(p, p);
    worst = std::max(worst, ychan::sum_upper_restricted(g, pw) -
                                ychan::sum_upper_general(g, pw));
  }
  if (worst > 1e-9) {
    pass = false;
    detail << "restricted bound exceeded general by " << fmt(worst) << "; ";
  } else {
    detail << "restricted <= general everywhere (max excess " << fmt(worst)
           << "); ";
  }
  double dt = seconds_since(t0);
  std::printf("[%s] criterion 3: restricted-mode certification, 1e5 instances: %s%.2f s\n",
              pass ? "PASS" : "FAIL", detail.str().c_str(), dt);
  return pass;
}

// ---------------------------------------------------------------------- 4 --

bool criterion_4() {
  auto t0 = Clock::now();
  bool pass = true;
  std::ostringstream detail;

  double worst1 = -1e300;
  double worst1_db = 0.0;
  for (int i = 0; i <= 800; ++i) {
    double db = -20.0 + 0.1 * i;
    double p = ychan::db_to_linear(db);
    double gap = ychan::symmetric_gap(ychan::PowerBudget(p, p));
    if (gap > worst1) {
      worst1 = gap;
      worst1_db = db;
    }
  }
  if (worst1 > 1.0 + 1e-9) {
    pass = false;
    detail << "equal-power gap " << fmt(worst1) << " > 1 at " << fmt(worst1_db)
           << " dB; ";
  } else {
    detail << "equal-power max gap " << fmt(worst1) << " <= 1 (at "
           << fmt(worst1_db) << " dB); ";
  }

  double worst2 = -1e300;
  double w2p = 0.0, w2pr = 0.0;
  for (int i = -20; i <= 60; ++i) {
    for (int j = -20; j <= 60; ++j) {
      double gap = ychan::symmetric_gap(ychan::PowerBudget(
          ychan::db_to_linear(i), ychan::db_to_linear(j)));
      if (gap > worst2) {
        worst2 = gap;
        w2p = i;
        w2pr = j;
      }
    }
  }
  if (worst2 > 1.5 + 1e-9) {
    pass = false;
    detail << "grid gap " << fmt(worst2) << " > 1.5 at (" << w2p << ", " << w2pr
           << ") dB";
  } else {
    detail << "grid max gap " << fmt(worst2) << " <= 1.5 (at (" << w2p << ", "
           << w2pr << ") dB)";
  }
  double dt = seconds_since(t0);
  std::printf("[%s] criterion 4: symmetric one-bit claim: %s; %.2f s\n",
              pass ? "PASS" : "FAIL", detail.str().c_str(), dt);
  return pass;
}

// ---------------------------------------------------------------------- 5 --

bool criterion_5() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(515);
  auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  bool pass = true;
  std::ostringstream detail;
  double worst_value = 0.0, worst_point = 0.0;
  for (int i = 0; i < 10000 && pass; ++i) {
    double v[3] = {10.0 * u(), 10.0 * u(), 10.0 * u()};
    std::sort(v, v + 3, std::greater<>());
    ychan::ThreeRateLp t(v[0], v[1], v[2]);
    ychan::ThreeRateSolution cf = ychan::solve_closed_form(t);

    double expect = std::min((t.a + t.b + t.c) / 2.0, t.b + t.c);
    ychan::LinearProgram lp;
    lp.objective = {1.0, 1.0, 1.0};
    lp.constraints = {{{1.0, 1.0, 0.0}, t.a},
                      {{0.0, 1.0, 1.0}, t.b},
                      {{1.0, 0.0, 1.0}, t.c}};
    ychan::LpSolution sx = ychan::solve_simplex(lp);

    double vmax = 0.0;
    for (const auto& vert : ychan::enumerate_vertices(lp)) {
      vmax = std::max(vmax, vert[0] + vert[1] + vert[2]);
    }

    worst_value = std::max({worst_value, std::abs(cf.value - expect),
                            std::abs(cf.value - sx.value),
                            std::abs(cf.value - vmax)});

    // Corner recovery: N in the interior regime, M on the edge regime.
    double nx[3];
    if (t.a < t.b + t.c) {
      nx[0] = 0.5 * (t.a - t.b + t.c);
      nx[1] = 0.5 * (t.a + t.b - t.c);
      nx[2] = 0.5 * (-t.a + t.b + t.c);
    } else {
      nx[0] = t.c;
      nx[1] = t.b;
      nx[2] = 0.0;
    }
    for (int k = 0; k < 3; ++k) {
      worst_point = std::max({worst_point, std::abs(cf.point[k] - nx[k]),
                              std::abs(sx.point[k] - nx[k])});
    }
    if (worst_value > 1e-9 || worst_point > 1e-9) {
      pass = false;
      detail << "disagreement at (a,b,c)=(" << fmt(t.a) << "," << fmt(t.b)
             << "," << fmt(t.c) << "); ";
    }
  }
  detail << "1e4 programs, worst value disagreement " << fmt(worst_value)
         << ", worst corner distance " << fmt(worst_point);
  double dt = seconds_since(t0);
  std::printf("[%s] criterion 5: three-rate program equivalence: %s; %.2f s\n",
              pass ? "PASS" : "FAIL", detail.str().c_str(), dt);
  return pass;
}

// ---------------------------------------------------------------------- 6 --

bool criterion_6() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(616);
  auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  bool pass = true;
  std::ostringstream detail;
  double worst_gen = -1e300, worst_res = -1e300, worst_lower = -1e300;
  for (int i = 0; i < 1000; ++i) {
    double p = std::pow(10.0, (90.0 * u() - 30.0) / 10.0);
    double h[3];
    for (auto& v : h) {
      double mag = std::pow(10.0, (40.0 * u() - 20.0) / 20.0);
      v = (rng() & 1) ? -mag : mag;
    }
    ychan::ChannelGains g = ychan::ChannelGains::canonicalized(h[0], h[1], h[2]);
    ychan::PowerBudget pw(p, p);

    double og = ychan::max_sum_rate(
                    ychan::build_outer_region(g, pw, ychan::ChannelMode::General))
                    .value;
    double orr = ychan::max_sum_rate(ychan::build_outer_region(
                                         g, pw, ychan::ChannelMode::Restricted))
                     .value;
    worst_gen = std::max(worst_gen,
                         og - std::min(ychan::sum_upper_cutset(g, pw),
                                       ychan::sum_upper_general(g, pw)));
    worst_res = std::max(worst_res, orr - ychan::sum_upper_restricted(g, pw));

    ychan::LowerBoundReport lo = ychan::lower_bound_report(g, pw);
    for (double lower : {lo.c_cdf, lo.c_fdf, lo.c_fdf2}) {
      worst_lower = std::max({worst_lower, lower - og, lower - orr});
    }
  }
  if (worst_gen > 1e-9 || worst_res > 1e-9 || worst_lower > 1e-9) {
    pass = false;
  }
  detail << "1e3 instances: general optimum excess over min upper "
         << fmt(worst_gen) << ", restricted excess " << fmt(worst_res)
         << ", lower-bound excess over optimum " << fmt(worst_lower);
  double dt = seconds_since(t0);
  std::printf("[%s] criterion 6: outer-region consistency: %s; %.2f s\n",
              pass ? "PASS" : "FAIL", detail.str().c_str(), dt);
  return pass;
}

// ---------------------------------------------------------------------- 7 --

bool criterion_7() {
  auto t0 = Clock::now();
  bool pass = true;
  std::ostringstream detail;

  // Exhaustive inverse check over every alphabet up to 64.
  std::uint64_t checked = 0;
  for (std::uint64_t q = 2; q <= 64 && pass; ++q) {
    for (std::uint64_t a = 0; a < q && pass; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        ychan::Message mf{a, 1, 2, 1};
        ychan::Message mb{b, 2, 1, 1};
        ychan::RelayIndex idx = ychan::relay_combine(mf, mb, q);
        if (ychan::user_extract(idx, mf, q).value != b ||
            ychan::user_extract(idx, mb, q).value != a) {
          pass = false;
          detail << "inverse failed at q=" << q << " a=" << a << " b=" << b
                 << "; ";
          break;
        }
        ++checked;
      }
    }
  }
  detail << checked << " combine/extract pairs inverted; ";

  // Randomized schedules.
  std::mt19937_64 rng(717);
  std::uint64_t runs_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t frames = 1 + rng() % 100;
    std::uint64_t q = 2 + rng() % ((1u << 16) - 1);
    std::uint64_t seed = rng();
    ychan::ScheduleResult res = ychan::run_schedule(frames, q, seed);
    if (!res.correct || res.delivered != 6 * frames ||
        res.blocks.size() != 3 * frames + 1) {
      pass = false;
      detail << "schedule failed at frames=" << frames << " q=" << q
             << " seed=" << seed << "; ";
      break;
    }
    ++runs_ok;
  }
  detail << runs_ok << "/1000 random schedules correct; ";

  // Throughput at b = 1e4 against the 2-bits-per-block asymptote.
  ychan::ScheduleResult big = ychan::run_schedule(10000, 16, 20260819);
  double thr = ychan::throughput(big, {1.0, 1.0, 1.0});
  double err = std::abs(thr - 2.0);
  if (!big.correct || err > 1e-3) {
    pass = false;
    detail << "throughput " << fmt(thr) << " off asymptote by " << fmt(err);
  } else {
    detail << "throughput " << fmt(thr) << " within " << fmt(err)
           << " of the asymptote";
  }
  double dt = seconds_since(t0);
  std::printf("[%s] criterion 7: protocol round-trip: %s; %.2f s\n",
              pass ? "PASS" : "FAIL", detail.str().c_str(), dt);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
      ++i;
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }
  bool (*checks[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                        criterion_5, criterion_6, criterion_7};
  int failures = 0;
  for (int n = 1; n <= 7; ++n) {
    if (only != 0 && n != only) continue;
    if (!checks[n - 1]()) ++failures;
  }
  if (only == 0) {
    std::printf("%d of 7 criteria failed\n", failures);
  }
  return failures > 0 ? 1 : 0;
}
