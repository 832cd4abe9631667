#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>

namespace fuzzytrack::cli {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kBlank = " \t\r\n";
  const auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_whole(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string out(buf);
  if (std::isfinite(value) && out.find_first_of(".e") == std::string::npos) {
    out += ".0";
  }
  return out;
}

std::optional<double> parse_number(std::string_view text) {
  auto v = parse_whole<double>(text);
  if (v && !std::isfinite(*v)) return std::nullopt;
  return v;
}

std::optional<long long> parse_integer(std::string_view text) {
  return parse_whole<long long>(text);
}

std::vector<Sample> read_samples(std::istream& in) {
  std::vector<Sample> out;
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view row = trim(raw);
    if (line == 1 && row.starts_with("\xEF\xBB\xBF")) row = trim(row.substr(3));
    if (row.empty()) continue;
    if (!have_header) {
      if (row != "k,x") throw CsvError(line, "expected header 'k,x'");
      have_header = true;
      continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
      throw CsvError(line, "expected two fields");
    }
    const auto k = parse_integer(row.substr(0, comma));
    const auto x = parse_number(row.substr(comma + 1));
    if (!k) throw CsvError(line, "bad step index");
    if (!x) throw CsvError(line, "bad position value");
    const long long expected = static_cast<long long>(out.size()) + 1;
    if (*k != expected) {
      throw CsvError(line, "expected k=" + std::to_string(expected) + ", got " +
                               std::to_string(*k));
    }
    out.push_back({*k, *x});
  }
  if (!have_header) throw CsvError(line == 0 ? 1 : line, "missing header 'k,x'");
  return out;
}

}  // namespace fuzzytrack::cli
