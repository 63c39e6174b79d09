#pragma once

// Exact existence intervals P = (mu1, mu2] of periodic orbits of
//
//   x -> a x + mu        (x <= 0)
//   x -> b x + mu + l    (x >  0)
//
// for a given symbolic pattern. Everything here is exact rational arithmetic.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "symbolic.hpp"

namespace pwlmap {

struct Params {
  Rational a;
  Rational b;
  Rational l{-1};

  bool operator==(const Params&) const = default;
};

/// Both slopes must lie in (0, 1).
inline void require_stable(const Params& p) {
  if (!(p.a > 0 && p.a < 1 && p.b > 0 && p.b < 1))
    throw error(errc::invalid_params, "a and b must lie in (0, 1), got a=" + to_string(p.a) + " b=" + to_string(p.b));
}

/// Orbit analysis is carried out on the normalized gap l = -1.
inline void require_orbit_params(const Params& p) {
  require_stable(p);
  if (p.l != -1) throw error(errc::invalid_params, "orbit analysis requires l = -1, got l=" + to_string(p.l));
}

/// S_n^k = 1 + k + ... + k^n, with S_{-1}^k = 0.
inline Rational geom_sum(const Rational& k, int n) {
  Rational sum{0}, term{1};
  for (int i = 0; i <= n; ++i) {
    sum += term;
    term *= k;
  }
  return sum;
}

/// x_i = alpha * x_0 + beta * mu + gamma
struct AffineStep {
  Rational alpha{1};
  Rational beta{0};
  Rational gamma{0};

  bool operator==(const AffineStep&) const = default;
};

/// Entries 0..|p|; entry i expresses x_i in terms of x_0 and mu.
using AffineTrace = std::vector<AffineStep>;

inline AffineTrace trace(const Pattern& p, const Params& params) {
  AffineTrace out;
  out.reserve(p.size() + 1);
  out.emplace_back();
  for (Symbol s : p) {
    const AffineStep& prev = out.back();
    const Rational& slope = s == Symbol::L ? params.a : params.b;
    Rational shift = s == Symbol::L ? Rational{0} : params.l;
    out.push_back({slope * prev.alpha, slope * prev.beta + 1, slope * prev.gamma + shift});
  }
  return out;
}

/// u * mu + v
struct LinearInMu {
  Rational slope;
  Rational offset;

  Rational operator()(const Rational& mu) const { return slope * mu + offset; }
  bool operator==(const LinearInMu&) const = default;
};

/// Solves the periodicity condition x_n = x_0 for x_0 as a function of mu.
inline LinearInMu solve_x0(const Pattern& p, const Params& params) {
  require_stable(params);
  if (p.size() < 2) throw error(errc::uniform_pattern, "periodic orbit analysis needs |p| >= 2");
  const AffineStep last = trace(p, params).back();
  const Rational denom = 1 - last.alpha;
  return {last.beta / denom, last.gamma / denom};
}

/// Orbit points x_0..x_{n-1} at a specific mu, assuming the orbit follows p.
inline std::vector<Rational> orbit_points(const Pattern& p, const Params& params, const Rational& mu) {
  const Rational x0 = solve_x0(p, params)(mu);
  std::vector<Rational> points;
  points.reserve(p.size());
  Rational x = x0;
  for (Symbol s : p) {
    points.push_back(x);
    x = s == Symbol::L ? params.a * x + mu : params.b * x + mu + params.l;
  }
  return points;
}

/// Interval of mu with independent open/closed ends. Orbit intervals have the
/// shape (lo, hi].
struct MuInterval {
  Rational lo;
  Rational hi;
  bool lo_open = true;
  bool hi_open = false;

  bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }

  bool contains(const Rational& mu) const {
    if (empty()) return false;
    bool above = lo_open ? mu > lo : mu >= lo;
    bool below = hi_open ? mu < hi : mu <= hi;
    return above && below;
  }

  Rational midpoint() const { return (lo + hi) / 2; }

  std::string str() const {
    return std::string(lo_open ? "(" : "[") + to_string(lo) + ", " + to_string(hi) + (hi_open ? ")" : "]");
  }

  bool operator==(const MuInterval&) const = default;
};

enum class BoundKind { lower, upper, tautology, contradiction };

/// The constraint contributed by x_i landing on the side coded by p[i].
struct Bound {
  std::size_t position;
  Rational value;
  BoundKind kind;
  bool strict;
};

namespace detail {

inline Bound constraint_at(std::size_t i, Symbol s, const Rational& coef, const Rational& constant) {
  // x_i = coef * mu + constant; L requires x_i <= 0, R requires x_i > 0.
  if (coef == 0) {
    bool holds = s == Symbol::L ? constant <= 0 : constant > 0;
    return {i, Rational{0}, holds ? BoundKind::tautology : BoundKind::contradiction, false};
  }
  const Rational root = -constant / coef;
  const bool positive = coef > 0;
  if (s == Symbol::L) return {i, root, positive ? BoundKind::upper : BoundKind::lower, false};
  return {i, root, positive ? BoundKind::lower : BoundKind::upper, true};
}

}  // namespace detail

/// One constraint per position, in the caller's rotation.
inline std::vector<Bound> constraints(const Pattern& p, const Params& params) {
  require_orbit_params(params);
  detail::require_mixed(p, "mu_interval");
  const AffineTrace tr = trace(p, params);
  const LinearInMu x0 = solve_x0(p, params);
  std::vector<Bound> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const AffineStep& step = tr[i];
    out.push_back(detail::constraint_at(i, p[i], step.alpha * x0.slope + step.beta,
                                        step.alpha * x0.offset + step.gamma));
  }
  return out;
}

/// Existence interval of the orbit coded by p, intersected with 0 < mu < 1.
/// Degenerate constraints (zero mu coefficient) either drop out or force the
/// empty interval.
inline MuInterval mu_interval(const Pattern& p, const Params& params) {
  MuInterval result{Rational{0}, Rational{1}, true, true};
  for (const Bound& c : constraints(p, params)) {
    switch (c.kind) {
      case BoundKind::lower:
        if (c.value > result.lo || (c.value == result.lo && c.strict)) {
          result.lo = c.value;
          result.lo_open = c.strict;
        }
        break;
      case BoundKind::upper:
        if (c.value < result.hi || (c.value == result.hi && c.strict)) {
          result.hi = c.value;
          result.hi_open = c.strict;
        }
        break;
      case BoundKind::tautology:
        break;
      case BoundKind::contradiction:
        return {Rational{1}, Rational{0}, true, false};
    }
  }
  return result;
}

/// Closed form for L^n R: ( a^n / S_n^a , a^{n-1} / (a^{n-1} b + S_{n-1}^a) ].
inline MuInterval atomic_interval_L(int n, const Params& params) {
  require_orbit_params(params);
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational an1 = pow(a, n - 1);
  return {an1 * a / geom_sum(a, n), an1 / (an1 * b + geom_sum(a, n - 1))};
}

/// Closed form for L R^n:
/// ( (a b^{n-1} + S_{n-2}^b) / (a b^{n-1} + S_{n-1}^b) , S_{n-1}^b / S_n^b ].
inline MuInterval atomic_interval_R(int n, const Params& params) {
  require_orbit_params(params);
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational abn1 = a * pow(b, n - 1);
  return {(abn1 + geom_sum(b, n - 2)) / (abn1 + geom_sum(b, n - 1)), geom_sum(b, n - 1) / geom_sum(b, n)};
}

/// Closed form for L^n R L^{n-1} R (n >= 2), the simplest two-block molecule.
inline MuInterval molecular_pair_interval(int n, const Params& params) {
  require_orbit_params(params);
  if (n < 2) throw error(errc::invalid_params, "molecular pair needs n >= 2");
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational an1 = pow(a, n - 1);
  const Rational a2n2 = an1 * an1;
  const Rational common = (an1 * b + 1) * geom_sum(a, n - 1);
  return {(a2n2 * a * b + an1) / (a2n2 * a * b + common), (a2n2 * b + an1) / (a2n2 * b * b + common)};
}

/// Admissible: primitive with a non-empty existence interval. Non-primitive
/// words only reproduce the orbit of their primitive root.
inline bool is_admissible(const Pattern& p, const Params& params) {
  if (p.size() < 2 || !is_primitive(p)) return false;
  return !mu_interval(p, params).empty();
}

struct BoundLocations {
  std::size_t mu1_position = 0;  // R whose lower bound is the largest
  std::size_t mu2_position = 0;  // L whose upper bound is the smallest
  std::vector<Bound> bounds;
};

/// Positions (in the caller's rotation) of the inequalities that attain mu1
/// and mu2. On ties the earliest position wins.
inline BoundLocations bound_locations(const Pattern& p, const Params& params) {
  BoundLocations out;
  out.bounds = constraints(p, params);
  std::optional<Rational> best_lo, best_hi;
  for (const Bound& c : out.bounds) {
    if (c.kind == BoundKind::lower && (!best_lo || c.value > *best_lo)) {
      best_lo = c.value;
      out.mu1_position = c.position;
    } else if (c.kind == BoundKind::upper && (!best_hi || c.value < *best_hi)) {
      best_hi = c.value;
      out.mu2_position = c.position;
    }
  }
  return out;
}

/// Position of the last symbol of the R-way (for mu1) and L-way (for mu2)
/// arrangements, expressed in p's own indexing.
inline std::size_t predicted_mu1_position(const Pattern& p) { return (r_way_offset(p) + p.size() - 1) % p.size(); }
inline std::size_t predicted_mu2_position(const Pattern& p) { return (l_way_offset(p) + p.size() - 1) % p.size(); }

}  // namespace pwlmap
