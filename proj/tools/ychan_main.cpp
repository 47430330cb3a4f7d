// Command-line front end: bounds report for one channel instance, CSV sweeps
// over SNR, randomized certification of the constant-gap claims, and the
// message-level schedule simulator.
//
// Exit codes: 0 success, 1 failed claim or failed decode, 2 usage or domain
// error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ychan/fdf_protocol.hpp"
#include "ychan/gap_analysis.hpp"
#include "ychan/lower_bounds.hpp"
#include "ychan/model.hpp"
#include "ychan/outer_region.hpp"
#include "ychan/upper_bounds.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}
std::string f4(double v) { return fmt("%.4f", v); }
std::string g6(double v) { return fmt("%.6g", v); }

std::string mode_name(ychan::ChannelMode m) {
  switch (m) {
    case ychan::ChannelMode::General: return "general";
    case ychan::ChannelMode::Restricted: return "restricted";
    default: return "symmetric";
  }
}

ychan::ChannelMode parse_mode(const std::string& s) {
  if (s == "general") return ychan::ChannelMode::General;
  if (s == "restricted") return ychan::ChannelMode::Restricted;
  if (s == "symmetric") return ychan::ChannelMode::Symmetric;
  throw CLI::ValidationError("--mode", "must be general, restricted or symmetric");
}

std::string rate_sum_string(const ychan::RateConstraint& c) {
  std::string s;
  for (int i = 0; i < ychan::kNumRates; ++i) {
    if (c.coeff[static_cast<std::size_t>(i)] == 0.0) continue;
    auto [from, to] = ychan::rate_pair(i);
    if (!s.empty()) s += "+";
    s += "r" + std::to_string(from) + std::to_string(to);
  }
  return s;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << content;
}

// Shared channel/power options for bounds and sweep.
struct ChannelArgs {
  std::vector<double> h;
  double snr_db = 0.0;
  double power = 0.0;
  double power_relay = 0.0;
  std::string mode_str = "general";
  bool canonicalize = false;
  CLI::Option* snr_opt = nullptr;
  CLI::Option* power_opt = nullptr;
  CLI::Option* power_relay_opt = nullptr;

  void attach(CLI::App* cmd, bool with_power) {
    cmd->add_option("--h", h, "Channel gains h1 h2 h3 (relay-user links)")
        ->expected(3)
        ->required();
    if (with_power) {
      snr_opt = cmd->add_option("--snr-db", snr_db,
                                "Equal transmit SNR for users and relay, dB");
      power_opt = cmd->add_option("--power", power, "User transmit power P")
                      ->check(CLI::NonNegativeNumber);
      power_relay_opt =
          cmd->add_option("--power-relay", power_relay,
                          "Relay transmit power Pr (defaults to --power)")
              ->check(CLI::NonNegativeNumber);
      snr_opt->excludes(power_opt)->excludes(power_relay_opt);
    }
    cmd->add_option("--mode", mode_str, "general | restricted | symmetric")
        ->default_val("general");
    cmd->add_flag("--canonicalize", canonicalize,
                  "Relabel users so that h1^2 >= h2^2 >= h3^2");
  }

  ychan::ChannelGains gains() const {
    return canonicalize ? ychan::ChannelGains::canonicalized(h[0], h[1], h[2])
                        : ychan::ChannelGains::ordered(h[0], h[1], h[2]);
  }

  ychan::PowerBudget powers() const {
    if (snr_opt->count() > 0) {
      double p = ychan::db_to_linear(snr_db);
      return {p, p};
    }
    if (power_opt->count() == 0) {
      throw CLI::RequiredError("--snr-db or --power");
    }
    double pr = power_relay_opt->count() > 0 ? power_relay : power;
    return {power, pr};
  }

  ychan::ChannelMode mode() const { return parse_mode(mode_str); }
};

std::string regime_name(ychan::PowerRegime r) {
  return r == ychan::PowerRegime::LowPower ? "low_power" : "high_power";
}

// ---------------------------------------------------------------- bounds --

std::string bounds_table(const ychan::ChannelGains& g,
                         const ychan::PowerBudget& pw, ychan::ChannelMode mode,
                         const ychan::RatePolytope& poly,
                         const ychan::SumRateOptimum& opt,
                         const ychan::LowerBoundReport& lo) {
  std::ostringstream out;
  auto row = [&out](const std::string& k, const std::string& v) {
    out << "  " << k;
    for (std::size_t i = k.size(); i < 34; ++i) out << ' ';
    out << v << "\n";
  };

  out << "channel\n";
  row("h", "(" + g6(g.h1()) + ", " + g6(g.h2()) + ", " + g6(g.h3()) + ")");
  row("h^2", "(" + g6(g.h_sq(1)) + ", " + g6(g.h_sq(2)) + ", " +
                 g6(g.h_sq(3)) + ")");
  if (g.was_permuted()) {
    const auto& p = g.permutation();
    row("relabeled", "original users (" + std::to_string(p[0]) + ", " +
                         std::to_string(p[1]) + ", " + std::to_string(p[2]) +
                         ") -> (1, 2, 3)");
  }
  row("P", g6(pw.p_user) + " (" + g6(10.0 * std::log10(pw.p_user)) + " dB)");
  row("Pr", g6(pw.p_relay) + " (" + g6(10.0 * std::log10(pw.p_relay)) + " dB)");
  row("mode", mode_name(mode));

  out << "\nper-rate constraints (bits/use)\n";
  for (const auto& c : poly.constraints) {
    row(c.label + "  [" + rate_sum_string(c) + "]", f4(c.rhs));
  }

  out << "\nsum-rate upper bounds\n";
  if (pw.equal_powers()) {
    row("cutset", f4(ychan::sum_upper_cutset(g, pw)));
    row("general", f4(ychan::sum_upper_general(g, pw)));
    row("restricted", f4(ychan::sum_upper_restricted(g, pw)));
  } else {
    row("cutset/general/restricted", "n/a (defined only for P == Pr)");
  }

  out << "\nsum-rate lower bounds\n";
  row("cdf", f4(lo.c_cdf) + "  [" + lo.binding_cdf + "]");
  row("fdf", f4(lo.c_fdf) + "  [" + lo.binding_fdf + "]");
  row("fdf_two_user", f4(lo.c_fdf2) + "  [" + lo.binding_fdf2 + "]");
  row("best", f4(lo.best));

  out << "\nouter-region sum-rate maximum\n";
  row("value", f4(opt.value));
  std::string arg;
  for (int i = 0; i < ychan::kNumRates; ++i) {
    auto [from, to] = ychan::rate_pair(i);
    if (!arg.empty()) arg += "  ";
    arg += "r" + std::to_string(from) + std::to_string(to) + "=" +
           f4(opt.argmax[i]);
  }
  row("argmax", arg);

  if (pw.equal_powers()) {
    ychan::GapReport rep = ychan::gap(g, pw, mode);
    out << "\ngap (converse vs achievability)\n";
    row("regime", regime_name(rep.regime));
    row("upper (" + rep.upper_used + ")", f4(rep.upper));
    row("lower (" + rep.lower_used + ")", f4(rep.lower));
    row("additive", f4(rep.additive_gap));
    row("multiplicative", rep.multiplicative_gap
                              ? f4(*rep.multiplicative_gap)
                              : std::string("undefined (zero lower bound)"));
    row("analytic_cap", f4(rep.analytic_cap));
  }
  return out.str();
}

ordered_json bounds_json(const ychan::ChannelGains& g,
                         const ychan::PowerBudget& pw, ychan::ChannelMode mode,
                         const ychan::RatePolytope& poly,
                         const ychan::SumRateOptimum& opt,
                         const ychan::LowerBoundReport& lo) {
  ordered_json j;
  j["gains"] = {{"h1", g.h1()},
                {"h2", g.h2()},
                {"h3", g.h3()},
                {"permutation", g.permutation()}};
  j["power"] = {{"p", pw.p_user}, {"pr", pw.p_relay}};
  j["mode"] = mode_name(mode);
  j["constraints"] = ordered_json::array();
  for (const auto& c : poly.constraints) {
    j["constraints"].push_back(
        {{"label", c.label}, {"rates", rate_sum_string(c)}, {"rhs", c.rhs}});
  }
  if (pw.equal_powers()) {
    j["sum_upper"] = {{"cutset", ychan::sum_upper_cutset(g, pw)},
                      {"general", ychan::sum_upper_general(g, pw)},
                      {"restricted", ychan::sum_upper_restricted(g, pw)}};
  } else {
    j["sum_upper"] = nullptr;
  }
  j["sum_lower"] = {{"cdf", lo.c_cdf},
                    {"fdf", lo.c_fdf},
                    {"fdf_two_user", lo.c_fdf2},
                    {"best", lo.best},
                    {"binding",
                     {{"cdf", lo.binding_cdf},
                      {"fdf", lo.binding_fdf},
                      {"fdf_two_user", lo.binding_fdf2}}}};
  ordered_json argmax;
  for (int i = 0; i < ychan::kNumRates; ++i) {
    auto [from, to] = ychan::rate_pair(i);
    argmax["r" + std::to_string(from) + std::to_string(to)] = opt.argmax[i];
  }
  j["region_max"] = {{"value", opt.value}, {"argmax", argmax}};
  if (pw.equal_powers()) {
    ychan::GapReport rep = ychan::gap(g, pw, mode);
    j["gap"] = {{"regime", regime_name(rep.regime)},
                {"upper", rep.upper},
                {"lower", rep.lower},
                {"upper_used", rep.upper_used},
                {"lower_used", rep.lower_used},
                {"additive", rep.additive_gap},
                {"multiplicative", rep.multiplicative_gap
                                       ? ordered_json(*rep.multiplicative_gap)
                                       : ordered_json(nullptr)},
                {"analytic_cap", rep.analytic_cap}};
  } else {
    j["gap"] = nullptr;
  }
  return j;
}

// ----------------------------------------------------------------- sweep --

std::string sweep_csv(const ychan::ChannelGains& g, ychan::ChannelMode mode,
                      double from_db, double to_db, double step_db) {
  std::ostringstream out;
  out << "snr_db,c_sigma,c_sigma_g,c_sigma_r,c_I,c_II,c_III,region_max,gap\n";
  for (double snr = from_db; snr <= to_db + 1e-12; snr += step_db) {
    double p = ychan::db_to_linear(snr);
    ychan::PowerBudget pw(p, p);
    ychan::LowerBoundReport lo = ychan::lower_bound_report(g, pw);
    ychan::SumRateOptimum opt =
        ychan::max_sum_rate(ychan::build_outer_region(g, pw, mode));
    ychan::GapReport rep = ychan::gap(g, pw, mode);
    out << g6(snr) << ',' << g6(ychan::sum_upper_cutset(g, pw)) << ','
        << g6(ychan::sum_upper_general(g, pw)) << ','
        << g6(ychan::sum_upper_restricted(g, pw)) << ',' << g6(lo.c_cdf) << ','
        << g6(lo.c_fdf) << ',' << g6(lo.c_fdf2) << ',' << g6(opt.value) << ','
        << g6(rep.additive_gap) << '\n';
  }
  return out.str();
}

std::string sweep_grid_csv(double from_db, double to_db, double step_db) {
  std::ostringstream out;
  out << "snr_db,snr_relay_db,gap\n";
  for (double p_db = from_db; p_db <= to_db + 1e-12; p_db += step_db) {
    for (double pr_db = from_db; pr_db <= to_db + 1e-12; pr_db += step_db) {
      double gap = ychan::symmetric_gap(
          {ychan::db_to_linear(p_db), ychan::db_to_linear(pr_db)});
      out << g6(p_db) << ',' << g6(pr_db) << ',' << g6(gap) << '\n';
    }
  }
  return out.str();
}

// --------------------------------------------------------------- certify --

// --mode keeps only the claims meaningful for that mode; default keeps all.
std::vector<ychan::ClaimResult> filter_claims(
    const std::vector<ychan::ClaimResult>& claims,
    const std::optional<ychan::ChannelMode>& mode) {
  if (!mode) return claims;
  std::vector<ychan::ClaimResult> kept;
  for (const auto& c : claims) {
    if (*mode == ychan::ChannelMode::Symmetric &&
        c.claim != "symmetric_equal_power_le_1") {
      continue;
    }
    if (*mode == ychan::ChannelMode::General &&
        c.claim == "additive_high_power_restricted_le_2") {
      continue;
    }
    if (*mode == ychan::ChannelMode::Restricted &&
        c.claim == "additive_high_power_general_le_5_2") {
      continue;
    }
    kept.push_back(c);
  }
  return kept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sum-rate bounds, constant-gap certification and schedule simulation\n"
      "for the three-user Gaussian relay exchange channel"};
  // Long-form help only: the short -h slot would shadow the --h gains option.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);
  int rc = 0;

  // bounds ----------------------------------------------------------------
  auto* bounds = app.add_subcommand(
      "bounds", "Report every bound for one channel instance");
  auto bargs = std::make_shared<ChannelArgs>();
  bargs->attach(bounds, true);
  auto bjson = std::make_shared<bool>(false);
  auto bout = std::make_shared<std::string>();
  bounds->add_flag("--json", *bjson, "Emit JSON instead of a table");
  bounds->add_option("--out", *bout, "Write to a file instead of stdout");

  bounds->callback([bargs, bjson, bout]() {
    ychan::ChannelGains g = bargs->gains();
    ychan::PowerBudget pw = bargs->powers();
    ychan::ChannelMode mode = bargs->mode();
    ychan::validate_mode(mode, g);
    ychan::RatePolytope poly = ychan::build_outer_region(g, pw, mode);
    ychan::SumRateOptimum opt = ychan::max_sum_rate(poly);
    ychan::LowerBoundReport lo = ychan::lower_bound_report(g, pw);
    if (*bjson) {
      write_output(*bout, bounds_json(g, pw, mode, poly, opt, lo).dump(2) + "\n");
    } else {
      write_output(*bout, bounds_table(g, pw, mode, poly, opt, lo));
    }
  });

  // sweep -----------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "CSV of all bounds over an SNR range (equal powers), or the\n"
               "symmetric-channel gap over an independent (P, Pr) dB grid");
  auto sargs = std::make_shared<ChannelArgs>();
  sargs->attach(sweep, false);
  auto sfrom = std::make_shared<double>(0.0);
  auto sto = std::make_shared<double>(50.0);
  auto sstep = std::make_shared<double>(1.0);
  auto sgrid = std::make_shared<bool>(false);
  auto sout = std::make_shared<std::string>();
  sweep->add_option("--snr-from", *sfrom, "Sweep start, dB")->capture_default_str();
  sweep->add_option("--snr-to", *sto, "Sweep end (inclusive), dB")->capture_default_str();
  sweep->add_option("--snr-step", *sstep, "Sweep step, dB")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_flag("--grid", *sgrid,
                  "Independent user/relay power axes (unit gains only);\n"
                  "columns become snr_db,snr_relay_db,gap");
  sweep->add_option("--out", *sout, "Write CSV to a file instead of stdout");

  sweep->callback([sargs, sfrom, sto, sstep, sgrid, sout]() {
    if (*sfrom > *sto) {
      throw CLI::ValidationError("--snr-from", "must not exceed --snr-to");
    }
    if (*sgrid) {
      ychan::ChannelGains g = sargs->gains();
      ychan::validate_mode(ychan::ChannelMode::Symmetric, g);
      write_output(*sout, sweep_grid_csv(*sfrom, *sto, *sstep));
      return;
    }
    ychan::ChannelGains g = sargs->gains();
    ychan::ChannelMode mode = sargs->mode();
    ychan::validate_mode(mode, g);
    write_output(*sout, sweep_csv(g, mode, *sfrom, *sto, *sstep));
  });

  // certify ---------------------------------------------------------------
  auto* certify = app.add_subcommand(
      "certify", "Randomized sweep certifying the constant-gap claims");
  auto ctrials = std::make_shared<std::uint64_t>(0);
  auto cseed = std::make_shared<std::uint64_t>(0);
  auto cmode = std::make_shared<std::string>();
  auto cout_path = std::make_shared<std::string>();
  auto cfixed = std::make_shared<std::vector<double>>();
  auto cspec = std::make_shared<ychan::SampleSpec>();
  certify->add_option("--trials", *ctrials, "Number of random instances")
      ->required()
      ->check(CLI::PositiveNumber);
  certify->add_option("--seed", *cseed, "Master RNG seed")->capture_default_str();
  certify->add_option("--mode", *cmode,
                      "Keep only claims for this mode (default: all)");
  certify->add_option("--out", *cout_path, "Write the JSON certificate here");
  certify->add_option("--fixed-h", *cfixed,
                      "Pin the channel gains (only power stays random)")
      ->expected(3);
  certify->add_option("--power-db-min", cspec->power_db_min, "Power range, dB")
      ->capture_default_str();
  certify->add_option("--power-db-max", cspec->power_db_max, "Power range, dB")
      ->capture_default_str();
  certify->add_option("--gain-db-min", cspec->gain_db_min, "Gain range, dB")
      ->capture_default_str();
  certify->add_option("--gain-db-max", cspec->gain_db_max, "Gain range, dB")
      ->capture_default_str();

  certify->callback([&rc, ctrials, cseed, cmode, cout_path, cfixed, cspec]() {
    std::optional<ychan::ChannelMode> mode;
    if (!cmode->empty()) mode = parse_mode(*cmode);
    if (!cfixed->empty()) {
      cspec->fixed_gains = {{(*cfixed)[0], (*cfixed)[1], (*cfixed)[2]}};
    }
    ychan::GapCertificate cert = ychan::certify_gaps(*cspec, *ctrials, *cseed);
    cert.claims = filter_claims(cert.claims, mode);
    cert.all_pass = true;
    for (const auto& c : cert.claims) cert.all_pass = cert.all_pass && c.pass;

    std::ostringstream sum;
    for (const auto& c : cert.claims) {
      sum << (c.pass ? "pass" : "FAIL") << "  " << c.claim
          << "  bound=" << g6(c.bound) << "  max_observed=" << g6(c.max_observed)
          << "  samples=" << c.samples << "  witness h=(" << g6(c.witness.h1)
          << "," << g6(c.witness.h2) << "," << g6(c.witness.h3)
          << ") P=" << g6(c.witness.p) << " Pr=" << g6(c.witness.pr) << "\n";
    }
    sum << (cert.all_pass ? "ALL CLAIMS HOLD" : "CLAIM VIOLATION FOUND")
        << "  trials=" << cert.trials << " seed=" << cert.seed << "\n";
    std::cout << sum.str();
    if (!cout_path->empty()) {
      write_output(*cout_path, cert.to_json() + "\n");
    }
    if (!cert.all_pass) rc = 1;
  });

  // simulate --------------------------------------------------------------
  auto* simulate = app.add_subcommand(
      "simulate", "Deterministic message-level schedule simulation");
  auto frames = std::make_shared<std::uint64_t>(0);
  auto qmod = std::make_shared<std::uint64_t>(0);
  auto mseed = std::make_shared<std::uint64_t>(0);
  auto mout = std::make_shared<std::string>();
  auto r12 = std::make_shared<double>(1.0);
  auto r13 = std::make_shared<double>(1.0);
  auto r23 = std::make_shared<double>(1.0);
  simulate->add_option("--frames", *frames, "Full frames to run")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--q", *qmod, "Message alphabet size (mod-q addition)")
      ->required()
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
  simulate->add_option("--seed", *mseed, "Message RNG seed")->capture_default_str();
  simulate->add_option("--out", *mout, "Write a JSONL transcript here");
  simulate->add_option("--rate-12", *r12, "Bits per pair {1,2} message")
      ->capture_default_str();
  simulate->add_option("--rate-13", *r13, "Bits per pair {1,3} message")
      ->capture_default_str();
  simulate->add_option("--rate-23", *r23, "Bits per pair {2,3} message")
      ->capture_default_str();

  simulate->callback([&rc, frames, qmod, mseed, mout, r12, r13, r23]() {
    ychan::ScheduleResult res = ychan::run_schedule(*frames, *qmod, *mseed);
    double thr = ychan::throughput(res, {*r12, *r13, *r23});
    if (!mout->empty()) {
      write_output(*mout, ychan::transcript_to_jsonl(res));
    }
    std::cout << "frames=" << res.frames << " q=" << res.q
              << " seed=" << res.seed << " blocks=" << res.blocks.size()
              << " delivered=" << res.delivered
              << " correct=" << (res.correct ? "true" : "false")
              << " throughput=" << g6(thr) << "\n";
    if (!res.correct) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
