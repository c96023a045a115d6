#include "sphereavg/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sphereavg/errors.hpp"

namespace sphereavg {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw InternalError("format_double: to_chars failed");
  return {buf, ptr};
}

std::string format_rat_compact(const Rat& v) {
  if (v.den() == 1) return to_string(v.num());
  return v.to_fraction_string();
}

namespace {

int128 parse_int128(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rat: empty integer");
  bool negative = false;
  size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("parse_rat: bare sign");
  int128 value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9')
      throw std::invalid_argument("parse_rat: bad digit in '" +
                                  std::string(text) + "'");
    value = checked_add(checked_mul(value, static_cast<int128>(10)),
                        static_cast<int128>(c - '0'));
  }
  return negative ? -value : value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  // Strip surrounding spaces.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("parse_rat: empty value");

  if (const size_t slash = text.find('/'); slash != std::string_view::npos) {
    return Rat::fraction(parse_int128(text.substr(0, slash)),
                         parse_int128(text.substr(slash + 1)));
  }
  if (const size_t dot = text.find('.'); dot != std::string_view::npos) {
    // Finite decimals convert exactly: d.ddd -> dddd / 10^k.
    const std::string_view frac = text.substr(dot + 1);
    std::string digits(text.substr(0, dot));
    digits.append(frac);
    int128 den = 1;
    for (size_t i = 0; i < frac.size(); ++i)
      den = checked_mul(den, static_cast<int128>(10));
    return Rat::fraction(parse_int128(digits), den);
  }
  return Rat::from_int128(parse_int128(text));
}

double parse_double(std::string_view text) {
  const std::string copy(text);
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (end == copy.c_str())
    throw std::invalid_argument("parse_double: bad value '" + copy + "'");
  return v;
}

std::vector<std::string> read_nonempty_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

namespace {

template <class S>
void write_grid_impl(const GridFunction<S>& f, const std::filesystem::path& path,
                     std::string (*format)(const S&)) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << f.offset << "\n";
  for (const S& v : f.values) out << format(v) << "\n";
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string format_rat_value(const Rat& v) { return format_rat_compact(v); }
std::string format_double_value(const double& v) { return format_double(v); }

}  // namespace

void write_grid_function(const GridFunction<Rat>& f,
                         const std::filesystem::path& path) {
  write_grid_impl<Rat>(f, path, &format_rat_value);
}

void write_grid_function(const GridFunction<double>& f,
                         const std::filesystem::path& path) {
  write_grid_impl<double>(f, path, &format_double_value);
}

CsvWriter::CsvWriter(std::vector<std::string> header)
    : columns_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out_.push_back(',');
    out_ += header[i];
  }
  out_.push_back('\n');
}

void CsvWriter::row(std::vector<std::string> cells) {
  if (cells.size() != columns_)
    throw InternalError("CsvWriter: row width does not match header");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_.push_back(',');
    out_ += cells[i];
  }
  out_.push_back('\n');
}

std::string CsvWriter::str() const { return out_; }

void CsvWriter::write_file(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << out_;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sphereavg
