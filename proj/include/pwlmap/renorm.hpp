#pragma once

// Renormalization of the map on its molecular regions.
//
// For mu between the existence intervals of L^n R and L^{n-1} R every orbit is
// a sequence of the blocks L^n R and L^{n-1} R. The return map to the start of
// a block is again a two-branch affine map of the same form, so the pattern
// realized at mu can be found by descending through induced maps until an
// atomic region is reached.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "interval.hpp"
#include "rational.hpp"
#include "symbolic.hpp"

namespace pwlmap {

enum class RegionKind {
  case_a,  // atomic L^n R
  case_b,  // molecular: blocks L^n R and L^{n-1} R
  out_of_orbit_range,
};

/// Case c of order n is the atomic region of L^{n-1} R and is reported as
/// case_a with order n - 1. `mirrored` means mu lies above the LR interval and
/// the tag refers to the dual system (b, a, 1 - mu), i.e. to R-atomic blocks.
struct RegionTag {
  RegionKind kind = RegionKind::out_of_orbit_range;
  int n = 0;
  bool mirrored = false;

  bool operator==(const RegionTag&) const = default;
};

inline std::string to_string(const RegionTag& tag) {
  std::string side = tag.mirrored ? " (mirrored)" : "";
  switch (tag.kind) {
    case RegionKind::case_a: return "CaseA(" + std::to_string(tag.n) + ")" + side;
    case RegionKind::case_b: return "CaseB(" + std::to_string(tag.n) + ")" + side;
    case RegionKind::out_of_orbit_range: return "OutOfOrbitRange";
  }
  return "?";
}

namespace detail {

// Interval membership under either endpoint convention. The standard map puts
// the border point in L and its intervals are (lo, hi]; the mirrored map puts
// it in R and its intervals are [lo, hi).
struct Convention {
  bool right_open = false;

  bool above(const Rational& mu, const Rational& lo) const { return right_open ? mu >= lo : mu > lo; }
  bool at_most(const Rational& mu, const Rational& hi) const { return right_open ? mu < hi : mu <= hi; }
};

inline RegionTag classify(const Params& params, const Rational& mu, Convention conv) {
  if (mu <= 0 || mu >= 1) return {};
  const Rational& a = params.a;
  const Rational& b = params.b;
  // LR upper end 1/(1+b); anything above belongs to the R-atomic side.
  if (!conv.at_most(mu, Rational{1} / (1 + b))) {
    RegionTag tag = classify({b, a, -1}, 1 - mu, Convention{!conv.right_open});
    tag.mirrored = !tag.mirrored;
    return tag;
  }
  Rational a_prev{1};    // a^{n-1}
  Rational s_prev{1};    // S_{n-1}^a
  for (int n = 1;; ++n) {
    const Rational a_n = a_prev * a;
    const Rational s_n = s_prev + a_n;
    if (conv.above(mu, a_n / s_n)) {
      if (conv.at_most(mu, a_prev / (a_prev * b + s_prev))) return {RegionKind::case_a, n, false};
      return {RegionKind::case_b, n, false};
    }
    a_prev = a_n;
    s_prev = s_n;
  }
}

}  // namespace detail

/// Locates mu among the atomic intervals of L^n R (case a) and the molecular
/// gaps between consecutive ones (case b). Requires l = -1.
inline RegionTag classify_region(const Params& params, const Rational& mu) {
  require_orbit_params(params);
  if (mu <= 0 || mu >= 1)
    throw error(errc::out_of_orbit_range, "mu=" + to_string(mu) + " is outside (0, 1)");
  return detail::classify(params, mu, {});
}

/// Lower end of the molecular region of order n: a^{n-1} / (a^{n-1} b + S_{n-1}^a).
inline Rational molecular_region_lo(const Params& params, int n) {
  const Rational an1 = pow(params.a, n - 1);
  return an1 / (an1 * params.b + geom_sum(params.a, n - 1));
}

/// Upper end of the molecular region of order n: a^{n-1} / S_{n-1}^a.
inline Rational molecular_region_hi(const Params& params, int n) {
  return pow(params.a, n - 1) / geom_sum(params.a, n - 1);
}

struct InducedMap {
  int n = 0;
  Rational a_t;     // b a^n, slope of the long block
  Rational b_t;     // b a^{n-1}, slope of the short block
  Rational mu_t;    // mu b S_{n-1}^a + mu - 1
  Rational l_t;     // -mu b a^{n-1}
  Rational x_new;   // -mu S_{n-2}^a / a^{n-1}, border between long and short block
  Rational mu_bar;  // mu_t - x_new (1 - a_t)
  Rational l_bar;   // l_t + x_new (b_t - a_t)

  bool in_orbit_regime() const { return mu_bar > 0 && mu_bar < -l_bar; }

  /// The induced map rescaled to l = -1, with its offset.
  Params normalized_params() const { return {a_t, b_t, Rational{-1}}; }
  Rational normalized_mu() const { return mu_bar / -l_bar; }
};

/// Induced map coefficients without any region check.
inline InducedMap induced_map(const Params& params, const Rational& mu, int n) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational an1 = pow(a, n - 1);
  InducedMap m;
  m.n = n;
  m.a_t = b * an1 * a;
  m.b_t = b * an1;
  m.mu_t = mu * b * geom_sum(a, n - 1) + mu - 1;
  m.l_t = -mu * b * an1;
  m.x_new = -mu * geom_sum(a, n - 2) / an1;
  m.mu_bar = m.mu_t - m.x_new * (1 - m.a_t);
  m.l_bar = m.l_t + m.x_new * (m.b_t - m.a_t);
  return m;
}

/// Induced map on the open molecular region of order n; the result always
/// satisfies 0 < mu_bar < -l_bar.
inline InducedMap induce(const Params& params, const Rational& mu, int n) {
  require_orbit_params(params);
  if (n < 2) throw error(errc::not_molecular, "molecular regions have order n >= 2");
  if (!(mu > molecular_region_lo(params, n) && mu < molecular_region_hi(params, n)))
    throw error(errc::not_molecular, "mu=" + to_string(mu) + " is not inside the molecular region of order " +
                                         std::to_string(n));
  InducedMap m = induced_map(params, mu, n);
  if (!m.in_orbit_regime())
    throw error(errc::not_molecular, "induced map violates 0 < mu_bar < -l_bar at mu=" + to_string(mu));
  return m;
}

/// Replaces every L' (written L) by L^n R and every R' (written R) by L^{n-1} R.
inline Pattern expand_blocks(const Pattern& primed, int n) {
  if (n < 2) throw error(errc::invalid_params, "block expansion needs n >= 2");
  const Pattern r = Pattern::run(Symbol::R, 1);
  return substitute(primed, Pattern::run(Symbol::L, static_cast<std::size_t>(n)) + r,
                    Pattern::run(Symbol::L, static_cast<std::size_t>(n - 1)) + r);
}

/// Number of block-substitution levels needed to reduce p to an atomic word.
inline int substitution_levels(Pattern p) {
  int levels = 0;
  while (!is_atomic(p)) {
    if (has_LL_and_RR(p)) throw error(errc::not_block_decomposable, "'" + p.str() + "' mixes LL and RR");
    bool has_rr = false;
    for (std::size_t i = 0; i < p.size(); ++i) has_rr = has_rr || (p[i] == Symbol::R && p[(i + 1) % p.size()] == Symbol::R);
    if (has_rr) p = dual(p);
    const std::vector<std::size_t> blocks = block_decompose(p);
    std::size_t longest = 0;
    for (std::size_t k : blocks) longest = std::max(longest, k);
    std::vector<Symbol> primed;
    primed.reserve(blocks.size());
    for (std::size_t k : blocks) {
      if (k == longest) primed.push_back(Symbol::L);
      else if (k + 1 == longest) primed.push_back(Symbol::R);
      else throw error(errc::not_block_decomposable, "block sizes are not consecutive in '" + p.str() + "'");
    }
    p = Pattern(std::move(primed));
    if (p.is_uniform()) throw error(errc::not_block_decomposable, "repetition of a single block");
    ++levels;
  }
  return levels;
}

struct DescentLevel {
  int depth = 0;           // number of inductions performed before this level
  Params params;           // map analyzed at this level (before mirroring)
  Rational mu;
  RegionTag region;
  std::optional<InducedMap> induced;
};

struct Descent {
  Pattern pattern;
  std::vector<DescentLevel> levels;

  int depth() const { return levels.empty() ? 0 : levels.back().depth; }
};

inline constexpr int default_max_depth = 32;

/// Finds the pattern of the periodic orbit present at mu by recursive
/// renormalization. Fails with DepthExceeded when more than `max_depth`
/// inductions are needed and with OutOfOrbitRange at parameter values where no
/// periodic orbit exists (mu outside (0, 1), or the border of a plateau that
/// belongs to neither neighbour).
inline Descent pattern_at(const Params& params, const Rational& mu, int max_depth = default_max_depth) {
  require_orbit_params(params);
  if (mu <= 0 || mu >= 1)
    throw error(errc::out_of_orbit_range, "mu=" + to_string(mu) + " is outside (0, 1)");

  struct Undo {
    bool mirror;
    int n;
  };
  std::vector<Undo> undo;
  Descent out;
  Params current = params;
  Rational m = mu;
  detail::Convention conv;
  int depth = 0;

  for (;;) {
    const RegionTag tag = detail::classify(current, m, conv);
    DescentLevel level{depth, current, m, tag, std::nullopt};
    if (tag.kind == RegionKind::out_of_orbit_range) {
      out.levels.push_back(level);
      throw error(errc::out_of_orbit_range, "no periodic orbit: induced mu=" + to_string(m) + " at depth " +
                                                std::to_string(depth) + " is outside (0, 1)");
    }
    if (tag.mirrored) {
      undo.push_back({true, 0});
      current = {current.b, current.a, Rational{-1}};
      m = 1 - m;
      conv.right_open = !conv.right_open;
    }
    if (tag.kind == RegionKind::case_a) {
      out.levels.push_back(level);
      Pattern p = Pattern::run(Symbol::L, static_cast<std::size_t>(tag.n)) + Pattern::run(Symbol::R, 1);
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) p = it->mirror ? dual(p) : expand_blocks(p, it->n);
      out.pattern = std::move(p);
      return out;
    }
    if (depth >= max_depth)
      throw error(errc::depth_exceeded, "descent did not reach an atomic region within " + std::to_string(max_depth) +
                                            " levels");
    InducedMap induced = induced_map(current, m, tag.n);
    level.induced = induced;
    out.levels.push_back(level);
    if (!induced.in_orbit_regime())
      throw error(errc::out_of_orbit_range, "no periodic orbit: mu=" + to_string(m) + " sits on the edge of the " +
                                                "molecular region of order " + std::to_string(tag.n));
    undo.push_back({false, tag.n});
    current = induced.normalized_params();
    m = induced.normalized_mu();
    ++depth;
  }
}

}  // namespace pwlmap
