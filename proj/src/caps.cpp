#include "pathbetti/caps.hpp"

#include <cstdlib>
#include <string>

namespace pathbetti {

namespace {

template <typename T>
void read_env(const char* name, T& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument(raw);
    out = static_cast<T>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad value for ") + name + ": " + raw);
  }
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  read_env("PATHBETTI_MAX_FACETS", caps.max_facets);
  read_env("PATHBETTI_MAX_FACES", caps.max_faces);
  return caps;
}

}  // namespace pathbetti
