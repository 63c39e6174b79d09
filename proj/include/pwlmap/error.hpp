#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pwlmap {

enum class errc {
  parse,
  invalid_params,
  uniform_pattern,
  not_block_decomposable,
  degenerate_constraint,
  not_coprime,
  ceiling_exceeded,
  not_molecular,
  depth_exceeded,
  out_of_orbit_range,
};

constexpr std::string_view name(errc code) {
  switch (code) {
    case errc::parse: return "ParseError";
    case errc::invalid_params: return "InvalidParams";
    case errc::uniform_pattern: return "UniformPattern";
    case errc::not_block_decomposable: return "NotBlockDecomposable";
    case errc::degenerate_constraint: return "DegenerateConstraint";
    case errc::not_coprime: return "NotCoprime";
    case errc::ceiling_exceeded: return "CeilingExceeded";
    case errc::not_molecular: return "NotMolecular";
    case errc::depth_exceeded: return "DepthExceeded";
    case errc::out_of_orbit_range: return "OutOfOrbitRange";
  }
  return "Unknown";
}

/// Every analytic failure in the library is reported through this type; the
/// message is prefixed with the error name so it can be surfaced verbatim.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace pwlmap
