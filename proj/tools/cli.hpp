#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit status:
//   0 ok, 1 usage error, 2 analytic error, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pwlmap/io.hpp"
#include "pwlmap/pwlmap.hpp"
#include "pwlmap/verify.hpp"

namespace pwlmap::cli {

enum exit_status : int { ok = 0, usage = 1, analytic = 2, verification = 3 };

namespace detail {

struct Common {
  std::string a, b;
  bool json = false;

  Params params() const { return {parse_rational(a), parse_rational(b), Rational{-1}}; }
};

inline void add_params(CLI::App& cmd, Common& c, bool required = true) {
  auto* a = cmd.add_option("--a", c.a, "left slope, p/q or decimal");
  auto* b = cmd.add_option("--b", c.b, "right slope, p/q or decimal");
  if (required) {
    a->required();
    b->required();
  }
  cmd.add_flag("--json", c.json, "emit JSON");
}

inline std::string decimal_interval(const MuInterval& iv) {
  return std::string(iv.lo_open ? "(" : "[") + to_decimal(iv.lo) + ", " + to_decimal(iv.hi) + (iv.hi_open ? ")" : "]");
}

inline nlohmann::json interval_json(const Pattern& p, const Params& params) {
  const MuInterval iv = mu_interval(p, params);
  nlohmann::json j = {{"pattern", p},
                      {"period", p.size()},
                      {"params", params},
                      {"interval", iv},
                      {"decimal", {{"lo", to_double(iv.lo)}, {"hi", to_double(iv.hi)}}},
                      {"primitive", is_primitive(p)},
                      {"admissible", is_admissible(p, params)}};
  const BoundLocations loc = bound_locations(p, params);
  j["bounds"] = loc.bounds;
  j["mu1_position"] = loc.mu1_position;
  j["mu2_position"] = loc.mu2_position;
  return j;
}

inline void print_interval(std::ostream& out, const Pattern& p, const Params& params) {
  const MuInterval iv = mu_interval(p, params);
  const BoundLocations loc = bound_locations(p, params);
  out << "pattern     " << p << '\n'
      << "period      " << p.size() << '\n'
      << "interval    " << iv.str() << (iv.empty() ? "  (empty)" : "") << '\n'
      << "decimal     " << decimal_interval(iv) << '\n'
      << "mu1         " << to_decimal(loc.bounds[loc.mu1_position].value) << " from R at position "
      << loc.mu1_position << '\n'
      << "mu2         " << to_decimal(loc.bounds[loc.mu2_position].value) << " from L at position "
      << loc.mu2_position << '\n'
      << "primitive   " << (is_primitive(p) ? "yes" : "no") << '\n'
      << "admissible  " << (is_admissible(p, params) ? "yes" : "no") << '\n'
      << "bounds\n";
  for (const Bound& b : loc.bounds)
    out << "  " << b.position << ' ' << to_char(p[b.position]) << ' ' << to_string(b.kind) << ' '
        << to_decimal(b.value) << "  " << to_string(b.value) << '\n';
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable periodic orbits of the piecewise-linear map x -> ax+mu (x<=0), bx+mu+l (x>0)", "pwlmap"};
  app.require_subcommand(1);

  detail::Common iv_opts;
  std::string iv_pattern;
  auto* interval_cmd = app.add_subcommand("interval", "exact existence interval of a pattern");
  detail::add_params(*interval_cmd, iv_opts);
  interval_cmd->add_option("pattern", iv_pattern, "pattern over {L,R}")->required();

  detail::Common gen_opts;
  int period = 0;
  auto* generate_cmd = app.add_subcommand("generate", "all admissible patterns of a period");
  detail::add_params(*generate_cmd, gen_opts, false);
  generate_cmd->add_option("--period", period, "period n >= 2")->required();

  detail::Common loc_opts;
  std::string loc_mu;
  int max_depth = default_max_depth;
  auto* locate_cmd = app.add_subcommand("locate", "pattern of the orbit present at mu");
  detail::add_params(*locate_cmd, loc_opts);
  locate_cmd->add_option("--mu", loc_mu, "parameter mu")->required();
  locate_cmd->add_option("--max-depth", max_depth, "maximum number of renormalization levels");

  detail::Common scan_opts;
  double scan_from = 0, scan_to = 0;
  int scan_steps = 0;
  std::string scan_out;
  OrbitOptions orbit_opt;
  auto* scan_cmd = app.add_subcommand("scan", "simulate on a uniform mu grid, CSV output");
  detail::add_params(*scan_cmd, scan_opts);
  scan_cmd->add_option("--from", scan_from, "first mu")->required();
  scan_cmd->add_option("--to", scan_to, "last mu")->required();
  scan_cmd->add_option("--steps", scan_steps, "number of grid points")->required();
  scan_cmd->add_option("--out", scan_out, "CSV file (default stdout)");
  scan_cmd->add_option("--transient", orbit_opt.transient, "iterations discarded before detection");
  scan_cmd->add_option("--max-period", orbit_opt.max_period, "largest period searched");
  scan_cmd->add_option("--tol", orbit_opt.tol, "return-distance tolerance");

  detail::Common ver_opts;
  int n_max = 10;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check analysis, brute force and simulation");
  detail::add_params(*verify_cmd, ver_opts);
  verify_cmd->add_option("--n-max", n_max, "largest period checked");

  detail::Common dual_opts;
  std::string dual_pattern;
  auto* dual_cmd = app.add_subcommand("dual", "dual pattern and its interval under swapped slopes");
  detail::add_params(*dual_cmd, dual_opts);
  dual_cmd->add_option("pattern", dual_pattern, "pattern over {L,R}")->required();

  detail::Common reg_opts;
  std::string reg_mu, reg_l = "-1";
  auto* regime_cmd = app.add_subcommand("regime", "fixed-point regime (cases 1-6)");
  detail::add_params(*regime_cmd, reg_opts);
  regime_cmd->add_option("--mu", reg_mu, "parameter mu")->required();
  regime_cmd->add_option("--l", reg_l, "gap height l");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (interval_cmd->parsed()) {
      const Params params = iv_opts.params();
      const Pattern p = Pattern::parse(iv_pattern);
      if (iv_opts.json) out << detail::interval_json(p, params).dump(2) << '\n';
      else detail::print_interval(out, p, params);
      return ok;
    }

    if (generate_cmd->parsed()) {
      const PatternFamily family = generate_period(period);
      std::optional<Params> params;
      if (!gen_opts.a.empty() || !gen_opts.b.empty()) params = gen_opts.params();
      if (gen_opts.json) {
        nlohmann::json members = nlohmann::json::array();
        for (const auto& [k, p] : family.members) {
          nlohmann::json m = {{"k", k}, {"pattern", p}};
          if (params) m["interval"] = mu_interval(p, *params);
          members.push_back(std::move(m));
        }
        out << nlohmann::json{{"period", family.period}, {"phi", euler_phi(period)}, {"members", members}}.dump(2)
            << '\n';
      } else {
        for (const auto& [k, p] : family.members) {
          out << p;
          if (params) out << "  " << mu_interval(p, *params).str();
          out << '\n';
        }
      }
      return ok;
    }

    if (locate_cmd->parsed()) {
      const Params params = loc_opts.params();
      const Rational mu = parse_rational(loc_mu);
      const Descent d = pattern_at(params, mu, max_depth);
      const MuInterval iv = mu_interval(d.pattern, params);
      if (loc_opts.json) {
        nlohmann::json levels = nlohmann::json::array();
        for (const DescentLevel& lv : d.levels) {
          nlohmann::json j = {{"depth", lv.depth}, {"n", lv.region.n}, {"region", to_string(lv.region)},
                              {"params", lv.params}, {"mu", to_string(lv.mu)}};
          if (lv.induced) j["induced"] = *lv.induced;
          levels.push_back(std::move(j));
        }
        out << nlohmann::json{{"pattern", d.pattern}, {"period", d.pattern.size()}, {"interval", iv},
                              {"depth", d.depth()}, {"levels", levels}}
                   .dump(2)
            << '\n';
      } else {
        out << "pattern   " << d.pattern << '\n'
            << "period    " << d.pattern.size() << '\n'
            << "interval  " << iv.str() << "  " << detail::decimal_interval(iv) << '\n';
        for (const DescentLevel& lv : d.levels) {
          out << "level " << lv.depth << ": n=" << lv.region.n << ' ' << to_string(lv.region)
              << " a=" << to_decimal(lv.params.a) << " b=" << to_decimal(lv.params.b) << " mu=" << to_decimal(lv.mu);
          if (lv.induced)
            out << " -> a~=" << to_decimal(lv.induced->a_t) << " b~=" << to_decimal(lv.induced->b_t)
                << " mu_bar=" << to_decimal(lv.induced->mu_bar) << " l_bar=" << to_decimal(lv.induced->l_bar);
          out << '\n';
        }
      }
      return ok;
    }

    if (scan_cmd->parsed()) {
      const Params params = scan_opts.params();
      require_orbit_params(params);
      const auto records = sweep(RealParams::from(params), scan_from, scan_to, scan_steps, orbit_opt);
      if (scan_out.empty()) {
        write_csv(out, records);
      } else {
        std::ofstream file(scan_out);
        if (!file) {
          err << "cannot open " << scan_out << '\n';
          return usage;
        }
        write_csv(file, records);
      }
      return ok;
    }

    if (verify_cmd->parsed()) {
      const VerifyReport report = verify(ver_opts.params(), n_max);
      if (ver_opts.json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckTally& c : report.checks)
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"failures", c.failures}});
        out << nlohmann::json{{"ok", report.ok()}, {"checks", checks}}.dump(2) << '\n';
      } else {
        for (const CheckTally& c : report.checks) {
          out << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << ": " << c.passed << " passed, " << c.failed
              << " failed\n";
          for (const std::string& f : c.failures) out << "     " << f << '\n';
        }
      }
      return report.ok() ? ok : verification;
    }

    if (dual_cmd->parsed()) {
      const Params params = dual_opts.params();
      const Params swapped{params.b, params.a, params.l};
      const Pattern p = Pattern::parse(dual_pattern);
      const Pattern d = dual(p);
      const MuInterval iv = mu_interval(p, params);
      const MuInterval dv = mu_interval(d, swapped);
      if (dual_opts.json) {
        out << nlohmann::json{{"pattern", p}, {"dual", d}, {"interval", iv}, {"dual_interval", dv},
                              {"dual_params", swapped}}
                   .dump(2)
            << '\n';
      } else {
        out << "pattern        " << p << "  " << iv.str() << '\n'
            << "dual           " << d << '\n'
            << "dual interval  " << dv.str() << "  (slopes swapped: a=" << to_string(swapped.a)
            << " b=" << to_string(swapped.b) << ")\n";
      }
      return ok;
    }

    if (regime_cmd->parsed()) {
      Params params = reg_opts.params();
      params.l = parse_rational(reg_l);
      const Rational mu = parse_rational(reg_mu);
      const Regime r = classify_regime(params, mu);
      if (reg_opts.json) {
        nlohmann::json j = {{"case", r.case_number}};
        j["x_left"] = r.x_left ? nlohmann::json(to_string(*r.x_left)) : nlohmann::json(nullptr);
        j["x_right"] = r.x_right ? nlohmann::json(to_string(*r.x_right)) : nlohmann::json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        out << "Case" << r.case_number;
        if (!r.x_left && !r.x_right) out << " (no fixed point)";
        if (r.x_left) out << " x_L=" << to_string(*r.x_left) << " (" << to_decimal(*r.x_left) << ")";
        if (r.x_right) out << " x_R=" << to_string(*r.x_right) << " (" << to_decimal(*r.x_right) << ")";
        out << '\n';
      }
      return ok;
    }
  } catch (const error& e) {
    err << e.what() << '\n';
    return e.code() == errc::parse ? usage : analytic;
  }
  return usage;
}

}  // namespace pwlmap::cli
