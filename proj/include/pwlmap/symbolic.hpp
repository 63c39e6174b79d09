#pragma once

// Cyclic words over {L, R}: the symbolic codes of orbits of the map.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace pwlmap {

/// L codes a point x <= 0, R a point x > 0.
enum class Symbol : std::uint8_t { L = 0, R = 1 };

constexpr Symbol flip(Symbol s) { return s == Symbol::L ? Symbol::R : Symbol::L; }
constexpr char to_char(Symbol s) { return s == Symbol::L ? 'L' : 'R'; }

/// The binary sequence of a pattern: 0 for L, 1 for R. Comparison is as binary
/// numbers, which for equal lengths is lexicographic order.
struct BinaryCode {
  std::vector<std::uint8_t> bits;

  auto operator<=>(const BinaryCode&) const = default;
};

class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  /// Accepts only uppercase 'L' and 'R'.
  static Pattern parse(std::string_view text) {
    if (text.empty()) throw error(errc::parse, "empty pattern");
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
      if (c == 'L') symbols.push_back(Symbol::L);
      else if (c == 'R') symbols.push_back(Symbol::R);
      else throw error(errc::parse, "pattern may only contain 'L' and 'R': '" + std::string(text) + "'");
    }
    return Pattern(std::move(symbols));
  }

  /// `count` copies of `s`.
  static Pattern run(Symbol s, std::size_t count) { return Pattern(std::vector<Symbol>(count, s)); }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  std::size_t count(Symbol s) const { return static_cast<std::size_t>(std::ranges::count(symbols_, s)); }
  bool is_uniform() const { return count(Symbol::L) == 0 || count(Symbol::R) == 0; }

  /// Rotation starting at index `offset` (symbol `offset` becomes symbol 0).
  Pattern rotated(std::size_t offset) const {
    std::vector<Symbol> out(symbols_.size());
    if (!symbols_.empty()) std::ranges::rotate_copy(symbols_, symbols_.begin() + (offset % symbols_.size()), out.begin());
    return Pattern(std::move(out));
  }

  Pattern& operator+=(const Pattern& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
  }
  friend Pattern operator+(Pattern lhs, const Pattern& rhs) { return lhs += rhs; }

  std::string str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(to_char(s));
    return out;
  }

  auto operator<=>(const Pattern&) const = default;
  bool operator==(const Pattern&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

inline std::ostream& operator<<(std::ostream& os, const Pattern& p) { return os << p.str(); }

inline BinaryCode encode(const Pattern& p) {
  BinaryCode code;
  code.bits.reserve(p.size());
  for (Symbol s : p) code.bits.push_back(static_cast<std::uint8_t>(s));
  return code;
}

inline Pattern dual(const Pattern& p) {
  std::vector<Symbol> out;
  out.reserve(p.size());
  for (Symbol s : p) out.push_back(flip(s));
  return Pattern(std::move(out));
}

namespace detail {

// Start of the lexicographically least rotation (two-pointer scan, linear time).
inline std::size_t least_rotation(const Pattern& p) {
  const std::size_t n = p.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Symbol a = p[(i + k) % n], b = p[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) i += k + 1;
    else j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

inline void require_mixed(const Pattern& p, const char* op) {
  if (p.is_uniform())
    throw error(errc::uniform_pattern, std::string(op) + " needs both symbols, got '" + p.str() + "'");
}

}  // namespace detail

/// Offset of the rotation with the smallest binary value (the R-way arrangement).
inline std::size_t r_way_offset(const Pattern& p) {
  detail::require_mixed(p, "r_way");
  return detail::least_rotation(p);
}

/// Offset of the rotation with the largest binary value (the L-way arrangement).
/// The largest rotation of p is the smallest rotation of its complement.
inline std::size_t l_way_offset(const Pattern& p) {
  detail::require_mixed(p, "l_way");
  return detail::least_rotation(dual(p));
}

/// Rotation whose binary code is minimal; begins with L and ends with R.
inline Pattern r_way(const Pattern& p) { return p.rotated(r_way_offset(p)); }

/// Rotation whose binary code is maximal; begins with R and ends with L.
inline Pattern l_way(const Pattern& p) { return p.rotated(l_way_offset(p)); }

/// Canonical key of the cyclic class: the R-way form, or the word itself when uniform.
inline Pattern canonical(const Pattern& p) {
  if (p.is_uniform()) return p;
  return r_way(p);
}

inline bool cyclically_equal(const Pattern& a, const Pattern& b) {
  return a.size() == b.size() && canonical(a) == canonical(b);
}

/// False iff p is a k-fold (k >= 2) repetition of a shorter word.
inline bool is_primitive(const Pattern& p) {
  const std::size_t n = p.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = p[i] == p[i - d];
    if (repeats) return false;
  }
  return true;
}

/// True iff some cyclic adjacency is LL and some cyclic adjacency is RR.
inline bool has_LL_and_RR(const Pattern& p) {
  const std::size_t n = p.size();
  bool ll = false, rr = false;
  for (std::size_t i = 0; i < n; ++i) {
    Symbol a = p[i], b = p[(i + 1) % n];
    if (a == b) (a == Symbol::L ? ll : rr) = true;
  }
  return ll && rr;
}

/// Substitutes `long_block` for every L and `short_block` for every R.
inline Pattern substitute(const Pattern& word, const Pattern& long_block, const Pattern& short_block) {
  Pattern out;
  for (Symbol s : word) out += s == Symbol::L ? long_block : short_block;
  return out;
}

/// Exactly one symbol of one kind and at least one of the other.
inline bool is_atomic(const Pattern& p) {
  return p.size() >= 2 && (p.count(Symbol::L) == 1 || p.count(Symbol::R) == 1);
}

/// Splits r_way(p) into consecutive blocks L^k R and returns the k of each
/// block in order. Patterns with RR adjacencies yield k = 0 blocks; pass their
/// dual to decompose over R-atomic blocks instead.
inline std::vector<std::size_t> block_decompose(const Pattern& p) {
  if (has_LL_and_RR(p) && !is_atomic(p))
    throw error(errc::not_block_decomposable, "'" + p.str() + "' has both LL and RR adjacencies");
  const Pattern arranged = r_way(p);
  std::vector<std::size_t> blocks;
  std::size_t run = 0;
  for (Symbol s : arranged) {
    if (s == Symbol::L) {
      ++run;
    } else {
      blocks.push_back(run);
      run = 0;
    }
  }
  return blocks;
}

}  // namespace pwlmap
