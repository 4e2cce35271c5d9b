#pragma once

#include <cstddef>

namespace hgrig {

/// Resource caps. Defaults can be overridden through the environment
/// variables HGRIG_VERTEX_CAP, HGRIG_CELL_CAP and HGRIG_CYCLE_CAP.
struct Caps {
  std::size_t vertices = 2'000'000;
  std::size_t cells = 400'000;
  std::size_t cycles = 1'000'000;
};

Caps default_caps();

}  // namespace hgrig
