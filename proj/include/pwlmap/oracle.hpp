#pragma once

// Floating-point simulation of the map, used as an independent check on the
// exact analysis: orbit detection, symbolic coding, regime classification and
// parameter sweeps.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "interval.hpp"
#include "rational.hpp"
#include "symbolic.hpp"

namespace pwlmap {

/// Map constants as doubles, for simulation.
struct RealParams {
  double a = 0;
  double b = 0;
  double l = -1;

  static RealParams from(const Params& p) { return {to_double(p.a), to_double(p.b), to_double(p.l)}; }
};

/// One application of the map. The border x = 0 takes the left branch.
inline double step(double x, const RealParams& p, double mu) {
  return x <= 0 ? p.a * x + mu : p.b * x + mu + p.l;
}

/// Cases 1-3 have l > 0, cases 4-6 have l <= 0. Case 5 (l < 0, 0 < mu <= -l)
/// has no fixed point; the others carry the fixed points that exist.
struct Regime {
  int case_number = 0;
  std::optional<Rational> x_left;   // mu / (1 - a), present iff it is <= 0
  std::optional<Rational> x_right;  // (mu + l) / (1 - b), present iff it is > 0
};

inline Regime classify_regime(const Params& params, const Rational& mu) {
  require_stable(params);
  Regime r;
  const Rational xl = mu / (1 - params.a);
  const Rational xr = (mu + params.l) / (1 - params.b);
  if (xl <= 0) r.x_left = xl;
  if (xr > 0) r.x_right = xr;
  if (params.l > 0) {
    r.case_number = r.x_left && r.x_right ? 2 : r.x_right ? 1 : 3;
  } else {
    r.case_number = r.x_left ? 4 : r.x_right ? 6 : 5;
  }
  return r;
}

struct OrbitOptions {
  int transient = 10000;
  int max_period = 512;
  double tol = 1e-10;
};

struct OrbitReport {
  bool found = false;
  int period = 0;
  std::vector<double> points;
  Pattern pattern;
  double residual = 0;
  bool border_ambiguous = false;  // some cycle point lies within tol of 0
};

/// Iterates from x = 0 past the transient, then looks for the smallest period
/// p whose return distance stays within tol over a full window of p steps.
inline OrbitReport find_orbit(const RealParams& params, double mu, const OrbitOptions& opt = {}) {
  double x = 0;
  for (int i = 0; i < opt.transient; ++i) x = step(x, params, mu);
  const auto max_period = static_cast<std::size_t>(std::max(opt.max_period, 1));
  std::vector<double> orbit(2 * max_period + 1);
  orbit[0] = x;
  for (std::size_t i = 1; i < orbit.size(); ++i) orbit[i] = step(orbit[i - 1], params, mu);

  OrbitReport report;
  for (std::size_t p = 1; p <= max_period; ++p) {
    double residual = 0;
    for (std::size_t t = 0; t < p && residual <= opt.tol; ++t)
      residual = std::max(residual, std::abs(orbit[t + p] - orbit[t]));
    if (residual > opt.tol) continue;
    report.found = true;
    report.period = static_cast<int>(p);
    report.residual = residual;
    report.points.assign(orbit.begin(), orbit.begin() + static_cast<std::ptrdiff_t>(p));
    std::vector<Symbol> code;
    code.reserve(p);
    for (double v : report.points) {
      code.push_back(v <= 0 ? Symbol::L : Symbol::R);
      report.border_ambiguous = report.border_ambiguous || std::abs(v) <= opt.tol;
    }
    report.pattern = Pattern(std::move(code));
    return report;
  }
  return report;
}

struct SweepRecord {
  double mu = 0;
  OrbitReport orbit;
};

/// find_orbit on a uniform grid of `steps` points spanning [mu_lo, mu_hi].
/// Grid points are split across worker threads.
inline std::vector<SweepRecord> sweep(const RealParams& params, double mu_lo, double mu_hi, int steps,
                                      const OrbitOptions& opt = {}, unsigned threads = 0) {
  if (!(mu_lo < mu_hi) || steps < 2) throw error(errc::invalid_params, "sweep needs mu_lo < mu_hi and steps >= 2");
  std::vector<SweepRecord> out(static_cast<std::size_t>(steps));
  const double h = (mu_hi - mu_lo) / (steps - 1);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(steps));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < threads; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (auto i = static_cast<std::size_t>(w); i < out.size(); i += threads) {
        const double mu = i + 1 == out.size() ? mu_hi : mu_lo + static_cast<double>(i) * h;
        out[i] = {mu, find_orbit(params, mu, opt)};
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

/// CSV columns: mu, period, pattern, residual, flags. Period 0 marks a grid
/// point where no orbit was found.
inline void write_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
  os << "mu,period,pattern,residual,flags\n";
  char buf[64];
  for (const SweepRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%.12g", r.mu);
    os << buf << ',' << (r.orbit.found ? r.orbit.period : 0) << ',' << r.orbit.pattern.str() << ',';
    std::snprintf(buf, sizeof buf, "%.3e", r.orbit.residual);
    os << (r.orbit.found ? buf : "") << ',';
    if (!r.orbit.found) os << "NoOrbitFound";
    else if (r.orbit.border_ambiguous) os << "BorderAmbiguous";
    os << '\n';
  }
}

}  // namespace pwlmap
