#pragma once

// Cross-validation of the analytic results against brute force enumeration,
// closed forms, the renormalization descent and float simulation.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "interval.hpp"
#include "oracle.hpp"
#include "patterngen.hpp"
#include "renorm.hpp"
#include "symbolic.hpp"

namespace pwlmap {

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only

  void record(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct VerifyReport {
  std::vector<CheckTally> checks;

  bool ok() const {
    return std::ranges::all_of(checks, [](const CheckTally& c) { return c.failed == 0; });
  }
};

/// Runs every cross-check for periods 2..max_period under `params`.
/// Brute-force enumeration stops at the brute-force ceiling.
inline VerifyReport verify(const Params& params, int max_period, const OrbitOptions& orbit_opt = {}) {
  require_orbit_params(params);
  CheckTally generation{"generation = brute force"};
  CheckTally closed_forms{"closed forms = solver"};
  CheckTally admissible{"generated patterns admissible"};
  CheckTally locations{"bound locations = arrangements"};
  CheckTally duality{"duality"};
  CheckTally descent{"descent round trip"};
  CheckTally simulation{"simulation at midpoints"};

  const RealParams real = RealParams::from(params);
  const Params swapped{params.b, params.a, params.l};

  for (int n = 2; n <= max_period; ++n) {
    const PatternFamily family = generate_period(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";

    if (n <= default_brute_force_ceiling) {
      std::set<Pattern> generated;
      for (const auto& [k, p] : family.members) generated.insert(p);
      generation.record(generated == exhaustive_admissible(n, params) &&
                            generated.size() == static_cast<std::size_t>(euler_phi(n)),
                        "period" + tag);
    }

    closed_forms.record(atomic_interval_L(n, params) == mu_interval(Pattern::parse(std::string(n, 'L') + "R"), params),
                        "L-atomic" + tag);
    closed_forms.record(atomic_interval_R(n, params) == mu_interval(Pattern::parse("L" + std::string(n, 'R')), params),
                        "R-atomic" + tag);
    const Pattern pair = Pattern::parse(std::string(n, 'L') + "R" + std::string(n - 1, 'L') + "R");
    closed_forms.record(molecular_pair_interval(n, params) == mu_interval(pair, params), "molecular pair" + tag);

    for (const auto& [k, p] : family.members) {
      const std::string label = p.str();
      const MuInterval iv = mu_interval(p, params);
      admissible.record(is_admissible(p, params), label);
      if (iv.empty()) continue;

      const BoundLocations loc = bound_locations(p, params);
      locations.record(loc.mu1_position == predicted_mu1_position(p) && loc.mu2_position == predicted_mu2_position(p),
                       label);

      const MuInterval d = mu_interval(dual(p), swapped);
      duality.record(d.lo == 1 - iv.hi && d.hi == 1 - iv.lo, label);

      const Rational mid = iv.midpoint();
      try {
        const Descent found = pattern_at(params, mid);
        descent.record(cyclically_equal(found.pattern, p) && found.depth() == substitution_levels(p), label);
      } catch (const error& e) {
        descent.record(false, label + ": " + e.what());
      }

      const OrbitReport orbit = find_orbit(real, to_double(mid), orbit_opt);
      simulation.record(orbit.found && orbit.period == n && cyclically_equal(orbit.pattern, p) &&
                            orbit.residual <= orbit_opt.tol,
                        label);
    }
  }
  return {{generation, closed_forms, admissible, locations, duality, descent, simulation}};
}

}  // namespace pwlmap
