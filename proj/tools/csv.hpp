#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzytrack::cli {

/// Malformed CSV content; `line` is 1-based and counts the header.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// 12 significant digits, always with a decimal point or exponent
/// ("5.0", "-0.174532925199", "1.5e-07"). Negative zero prints as "0.0".
std::string format_number(double value);

/// Strict parse of a whole field (surrounding blanks allowed).
std::optional<double> parse_number(std::string_view text);
std::optional<long long> parse_integer(std::string_view text);

struct Sample {
  long long k;
  double x;
};

/// Reads a `k,x` table. Rows must be numbered 1, 2, 3, ... in order.
/// Accepts LF or CRLF line endings and ignores blank lines.
std::vector<Sample> read_samples(std::istream& in);

}  // namespace fuzzytrack::cli
