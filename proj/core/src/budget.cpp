#include "sphereavg/budget.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sphereavg {

static Budget read_budget() {
  int64_t base = 8'000'000;
  if (const char* env = std::getenv("SPHEREAVG_BUDGET")) {
    try {
      base = std::max<int64_t>(1, std::stoll(env));
    } catch (...) {
      // Malformed values fall back to the default.
    }
  }
  return Budget{base, std::min<int64_t>(base, 1'000'000)};
}

const Budget& budget() {
  static const Budget b = read_budget();
  return b;
}

}  // namespace sphereavg
