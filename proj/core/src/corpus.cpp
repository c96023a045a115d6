#include "sphereavg/corpus.hpp"

namespace sphereavg {

GridFunction<Rat> random_integer_function(Lcg64& rng, int64_t half_width,
                                          int64_t value_lo, int64_t value_hi) {
  if (half_width < 0)
    throw std::invalid_argument("random_integer_function: negative half width");
  if (value_hi < value_lo)
    throw std::invalid_argument("random_integer_function: empty value range");
  std::vector<Rat> values;
  values.reserve(static_cast<size_t>(2 * half_width + 1));
  for (int64_t x = -half_width; x <= half_width; ++x)
    values.emplace_back(rng.uniform(value_lo, value_hi));
  return GridFunction<Rat>::from_values(-half_width, std::move(values));
}

GridFunction<Rat> random_sign_function(uint64_t seed, int64_t half_width) {
  Lcg64 rng(seed);
  std::vector<Rat> values;
  values.reserve(static_cast<size_t>(2 * half_width + 1));
  for (int64_t x = -half_width; x <= half_width; ++x)
    values.emplace_back((rng.next() & 1) != 0 ? 1 : -1);
  return GridFunction<Rat>::from_values(-half_width, std::move(values));
}

std::vector<NamedGridFunction> build_corpus(const CorpusOptions& options) {
  std::vector<NamedGridFunction> corpus;
  corpus.push_back({"delta", GridFunction<Rat>::delta()});
  for (int64_t m : options.indicator_half_widths)
    corpus.push_back({"chi_" + std::to_string(m),
                      GridFunction<Rat>::indicator(2 * m)});
  Lcg64 rng(options.seed);
  for (int i = 0; i < options.random_count; ++i) {
    std::string label = "rand_";
    label.push_back(static_cast<char>('a' + i));
    corpus.push_back({std::move(label),
                      random_integer_function(rng, options.random_half_width,
                                              options.value_lo, options.value_hi)});
  }
  return corpus;
}

}  // namespace sphereavg
