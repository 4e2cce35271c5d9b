#include "hgrig/caps.hpp"

#include <cstdlib>
#include <string>

#include "hgrig/error.hpp"

namespace hgrig {

namespace {

void read_env(const char* name, std::size_t& target) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(value, &used);
    if (used != std::string(value).size()) throw std::invalid_argument(name);
    target = static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw ValidationError(std::string(name) + " must be a non-negative integer");
  }
}

}  // namespace

Caps default_caps() {
  Caps caps;
  read_env("HGRIG_VERTEX_CAP", caps.vertices);
  read_env("HGRIG_CELL_CAP", caps.cells);
  read_env("HGRIG_CYCLE_CAP", caps.cycles);
  return caps;
}

}  // namespace hgrig
