#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathbetti {

/// Limits that keep the brute-force oracles feasible.
struct Caps {
  int max_facets = 24;
  std::size_t max_faces = std::size_t{1} << 22;

  /// Defaults, overridden by PATHBETTI_MAX_FACETS / PATHBETTI_MAX_FACES when set.
  static Caps from_env();
};

/// Thrown when an oracle instance is too large for the configured caps.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Serial kernels are the reference; parallel kernels must reproduce them exactly.
enum class Execution { serial, parallel };

}  // namespace pathbetti
