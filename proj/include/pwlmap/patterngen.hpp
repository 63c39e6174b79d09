#pragma once

// Generation of the admissible patterns of a given period, one per number of
// R symbols coprime to the period.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "error.hpp"
#include "interval.hpp"
#include "symbolic.hpp"

namespace pwlmap {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// The admissible pattern of period n with k R symbols.
///
/// With k <= n - k and n - k = q k + p, the word consists of p blocks L^{q+1}R
/// and k - p blocks L^q R. Their arrangement is itself the admissible word of
/// length k in which L stands for the longer block and R for the shorter one,
/// so the construction recurses on (k, k - p) and substitutes back. k > n - k
/// is handled by duality, k = 1 is the atomic base case.
inline Pattern pattern_for(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw error(errc::invalid_params, "pattern_for needs n >= 2 and 1 <= k <= n-1, got n=" + std::to_string(n) +
                                          " k=" + std::to_string(k));
  if (std::gcd(n, k) != 1)
    throw error(errc::not_coprime, "gcd(" + std::to_string(n) + ", " + std::to_string(k) + ") != 1");
  if (k > n - k) return dual(pattern_for(n, n - k));
  if (k == 1) return Pattern::run(Symbol::L, static_cast<std::size_t>(n - 1)) + Pattern::run(Symbol::R, 1);
  const int q = (n - k) / k;
  const int p = (n - k) % k;
  const Pattern r = Pattern::run(Symbol::R, 1);
  const Pattern long_block = Pattern::run(Symbol::L, static_cast<std::size_t>(q + 1)) + r;
  const Pattern short_block = Pattern::run(Symbol::L, static_cast<std::size_t>(q)) + r;
  return substitute(pattern_for(k, k - p), long_block, short_block);
}

struct PatternFamily {
  int period = 0;
  std::map<int, Pattern> members;  // keyed by the number of R symbols
};

/// All admissible patterns of period n, each in R-way form.
inline PatternFamily generate_period(int n) {
  if (n < 2) throw error(errc::invalid_params, "period must be >= 2");
  PatternFamily family{n, {}};
  for (int k = 1; k < n; ++k)
    if (std::gcd(n, k) == 1) family.members.emplace(k, r_way(pattern_for(n, k)));
  return family;
}

inline constexpr int default_brute_force_ceiling = 14;

/// Brute-force oracle: every cyclic class of binary words of length n that is
/// primitive and has a non-empty existence interval under `params`. Results
/// are canonical (R-way) representatives.
inline std::set<Pattern> exhaustive_admissible(int n, const Params& params,
                                                int ceiling = default_brute_force_ceiling) {
  if (n > ceiling)
    throw error(errc::ceiling_exceeded,
                "period " + std::to_string(n) + " exceeds brute-force ceiling " + std::to_string(ceiling));
  if (n < 2) throw error(errc::invalid_params, "period must be >= 2");
  std::set<Pattern> seen;
  std::set<Pattern> admissible;
  const std::uint32_t words = std::uint32_t{1} << n;
  std::vector<Symbol> symbols(static_cast<std::size_t>(n));
  for (std::uint32_t w = 1; w + 1 < words; ++w) {
    for (int i = 0; i < n; ++i) symbols[static_cast<std::size_t>(i)] = (w >> (n - 1 - i)) & 1u ? Symbol::R : Symbol::L;
    Pattern key = r_way(Pattern(symbols));
    if (!seen.insert(key).second) continue;
    if (is_primitive(key) && !mu_interval(key, params).empty()) admissible.insert(std::move(key));
  }
  return admissible;
}

}  // namespace pwlmap
