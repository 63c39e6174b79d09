#pragma once

// Shared helpers for the test suites: deterministic random parameters and
// brute-force references that do not go through the library's fast paths.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "pwlmap/pwlmap.hpp"

namespace pwlmap::testing {

/// a, b = p/q with q in [2, max_den] and 0 < p < q.
inline Params random_params(std::mt19937_64& rng, int max_den = 60) {
  std::uniform_int_distribution<int> den(2, max_den);
  auto pick = [&] {
    int q = den(rng);
    std::uniform_int_distribution<int> num(1, q - 1);
    return Rational(num(rng), q);
  };
  Rational a = pick();
  Rational b = pick();
  return {a, b, Rational{-1}};
}

inline std::vector<Pattern> all_rotations(const Pattern& p) {
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p.rotated(i));
  return out;
}

inline Pattern random_pattern(std::mt19937_64& rng, std::size_t length) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Symbol> s(length);
  for (auto& x : s) x = coin(rng) ? Symbol::R : Symbol::L;
  return Pattern(std::move(s));
}

/// Longest cyclic run of `s`.
inline std::size_t longest_run(const Pattern& p, Symbol s) {
  if (p.count(s) == p.size()) return p.size();
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < 2 * p.size(); ++i) {
    run = p[i % p.size()] == s ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

inline Pattern L_n_R(int n) { return Pattern::parse(std::string(static_cast<std::size_t>(n), 'L') + "R"); }
inline Pattern L_R_n(int n) { return Pattern::parse("L" + std::string(static_cast<std::size_t>(n), 'R')); }

/// All admissible patterns up to `max_period`, from the generator.
inline std::vector<Pattern> generated_up_to(int max_period) {
  std::vector<Pattern> out;
  for (int n = 2; n <= max_period; ++n)
    for (const auto& [k, p] : generate_period(n).members) out.push_back(p);
  return out;
}

}  // namespace pwlmap::testing
