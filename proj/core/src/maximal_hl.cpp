#include "sphereavg/maximal_hl.hpp"

namespace sphereavg {

double recorded_hl_ratio_bound(double p) {
  // Observed maxima 4.38 / 3.30 / 3.02, all attained by chi_16 (the N^{-1}
  // normalization makes M(chi) peak at 3 inside the plateau).
  if (p == 1.5) return 4.4;
  if (p == 2.0) return 3.4;
  if (p == 3.0) return 3.1;
  throw std::invalid_argument("recorded_hl_ratio_bound: no recorded sweep for p=" +
                              std::to_string(p));
}

}  // namespace sphereavg
