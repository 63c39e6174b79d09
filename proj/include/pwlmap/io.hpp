#pragma once

// JSON forms: rationals as "p/q" strings, intervals as
// {"lo", "hi", "lo_open", "hi_open", "empty"}.

#include <json.hpp>

#include "interval.hpp"
#include "rational.hpp"
#include "renorm.hpp"
#include "symbolic.hpp"

namespace pwlmap {

inline void to_json(nlohmann::json& j, const Pattern& p) { j = p.str(); }
inline void from_json(const nlohmann::json& j, Pattern& p) { p = Pattern::parse(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const MuInterval& i) {
  j = {{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}, {"lo_open", i.lo_open}, {"hi_open", i.hi_open},
       {"empty", i.empty()}};
}

inline void from_json(const nlohmann::json& j, MuInterval& i) {
  i.lo = parse_rational(j.at("lo").get<std::string>());
  i.hi = parse_rational(j.at("hi").get<std::string>());
  i.lo_open = j.value("lo_open", true);
  i.hi_open = j.value("hi_open", false);
}

inline void to_json(nlohmann::json& j, const Params& p) {
  j = {{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"l", to_string(p.l)}};
}

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::tautology: return "tautology";
    case BoundKind::contradiction: return "contradiction";
  }
  return "?";
}

inline void to_json(nlohmann::json& j, const Bound& b) {
  j = {{"position", b.position}, {"value", to_string(b.value)}, {"decimal", to_double(b.value)},
       {"kind", to_string(b.kind)}, {"strict", b.strict}};
}

inline void to_json(nlohmann::json& j, const InducedMap& m) {
  j = {{"n", m.n},
       {"a_t", to_string(m.a_t)},
       {"b_t", to_string(m.b_t)},
       {"mu_t", to_string(m.mu_t)},
       {"l_t", to_string(m.l_t)},
       {"x_new", to_string(m.x_new)},
       {"mu_bar", to_string(m.mu_bar)},
       {"l_bar", to_string(m.l_bar)}};
}

}  // namespace pwlmap
