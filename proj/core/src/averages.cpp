#include "sphereavg/averages.hpp"

#include <cmath>

namespace sphereavg {

Rat delta_maximal(int n, int64_t y) {
  if (n < 4) throw std::invalid_argument("delta_maximal: dimension must be >= 4");
  if (y == 0) return Rat(0);
  const int128 lambda_wide = checked_mul(checked_mul(static_cast<int128>(y),
                                                     static_cast<int128>(y)),
                                         static_cast<int128>(n));
  if (lambda_wide > std::numeric_limits<int64_t>::max())
    throw CapacityError("delta_maximal: n*y^2 exceeds 64 bits");
  const uint128 r = rep_count_single(n, static_cast<int64_t>(lambda_wide));
  return detail::divide_by_count(Rat(1), r);
}

ScalingReport scaling_witness(int n, int64_t half_width, double p, double q) {
  if (n < 4) throw std::invalid_argument("scaling_witness: dimension must be >= 4");
  if (half_width < 1)
    throw std::invalid_argument("scaling_witness: M must be >= 1");
  if (p < 1.0 || q < 1.0)
    throw std::invalid_argument("scaling_witness: exponents must be >= 1");
  if (4 * half_width + 1 > budget().max_sphere_points)
    throw BudgetError("scaling_witness: M exceeds the compute budget");

  const auto chi = GridFunction<Rat>::indicator(2 * half_width);
  std::vector<GridFunction<Rat>> fs(static_cast<size_t>(n), chi);
  MaximalOptions options;
  options.window = Window{-half_width, half_width};
  const auto a_star = apply_maximal<Rat>(n, fs, options);

  ScalingReport report;
  report.dimension = n;
  report.half_width = half_width;
  report.p = p;
  report.q = q;

  Rat dev(0);
  double qth_power_sum = 0.0;
  for (int64_t y = -half_width; y <= half_width; ++y) {
    const Rat v = a_star.at(y);
    dev = std::max(dev, abs(v - Rat(1)));
    qth_power_sum += std::pow(std::abs(v.to_double()), q);
  }
  report.plateau_exact = dev.is_zero();
  report.max_plateau_dev = dev.to_double();
  report.lq_lower = std::pow(qth_power_sum, 1.0 / q);
  report.lp_input_power =
      std::pow(static_cast<double>(4 * half_width + 1), static_cast<double>(n) / p);
  report.ratio = report.lq_lower / report.lp_input_power;
  return report;
}

}  // namespace sphereavg
