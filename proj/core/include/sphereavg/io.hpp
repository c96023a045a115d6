#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sphereavg/grid_function.hpp"

namespace sphereavg {

// Shortest round-trip decimal form.
std::string format_double(double v);

// "num/den" when the value is not an integer, plain integer otherwise.
std::string format_rat_compact(const Rat& v);

// Always "num/den" (the exact-mode CSV value form).
inline std::string format_rat(const Rat& v) { return v.to_fraction_string(); }

// Accepts "num/den", plain integers and finite decimals (exactly converted).
Rat parse_rat(std::string_view text);
double parse_double(std::string_view text);

template <class S>
S parse_scalar(std::string_view text);
template <>
inline Rat parse_scalar<Rat>(std::string_view text) { return parse_rat(text); }
template <>
inline double parse_scalar<double>(std::string_view text) {
  return parse_double(text);
}

template <class S>
std::string format_scalar(const S& v);
template <>
inline std::string format_scalar<Rat>(const Rat& v) { return format_rat(v); }
template <>
inline std::string format_scalar<double>(const double& v) {
  return format_double(v);
}

// Grid function file format: line 1 is the offset, each following nonempty
// line is one scalar (decimal or num/den).
std::vector<std::string> read_nonempty_lines(const std::filesystem::path& path);

template <class S>
GridFunction<S> read_grid_function(const std::filesystem::path& path) {
  const auto lines = read_nonempty_lines(path);
  if (lines.empty())
    throw std::runtime_error("grid function file " + path.string() +
                             ": missing offset line");
  GridFunction<S> f;
  f.offset = static_cast<int64_t>(std::stoll(lines[0]));
  f.values.reserve(lines.size() - 1);
  for (size_t i = 1; i < lines.size(); ++i)
    f.values.push_back(parse_scalar<S>(lines[i]));
  f.trim();
  return f;
}

void write_grid_function(const GridFunction<Rat>& f, const std::filesystem::path& path);
void write_grid_function(const GridFunction<double>& f, const std::filesystem::path& path);

// Buffered CSV emitter with "\n" line endings and a fixed column schema.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void row(std::vector<std::string> cells);
  std::string str() const;
  void write_file(const std::filesystem::path& path) const;

 private:
  size_t columns_;
  std::string out_;
};

}  // namespace sphereavg
