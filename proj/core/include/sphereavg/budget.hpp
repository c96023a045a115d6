#pragma once

#include <cstdint>

namespace sphereavg {

// Enumeration caps. SPHEREAVG_BUDGET overrides the base limit; the tensor
// block cap never exceeds one million cells regardless.
struct Budget {
  int64_t max_sphere_points;
  int64_t max_tensor_cells;
};

const Budget& budget();

}  // namespace sphereavg
