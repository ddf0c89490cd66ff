#pragma once

// Number rendering.  Tabulated energies are truncated toward zero at ten
// significant digits with trailing zeros trimmed; machine-readable output
// uses the shortest decimal that round-trips the double exactly.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <system_error>

namespace epath {

inline std::string trim_trailing_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  std::size_t last = s.find_last_not_of('0');
  if (s[last] == '.') --last;
  s.erase(last + 1);
  return s;
}

// Ten significant digits, truncated (never rounded), fixed notation over the
// tabulated magnitude range and scientific outside it.  Magnitudes below
// 1e-10 collapse to "0", and values within 1e-10 relative of an integer print
// as that integer, so eigensolver noise one ulp below n^2 cannot surface as a
// long nine string.
inline std::string table_number(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot render a non-finite number");
  if (std::abs(x) < 1e-10) return "0";
  const double snapped = std::nearbyint(x);
  if (snapped != 0.0 && std::abs(x - snapped) <= 1e-10 * std::max(1.0, std::abs(snapped)))
    x = snapped;

  char buf[80];
  std::snprintf(buf, sizeof buf, "%.40e", x);
  const std::string repr(buf);

  std::size_t pos = 0;
  const bool negative = repr[pos] == '-';
  if (negative) ++pos;
  std::string digits;
  digits.push_back(repr[pos]);
  pos += 2;  // skip the decimal point
  while (pos < repr.size() && repr[pos] != 'e') digits.push_back(repr[pos++]);
  const int exponent = std::atoi(repr.c_str() + pos + 1);
  digits.resize(10);

  std::string out;
  if (exponent >= 0 && exponent <= 9) {
    out = digits.substr(0, static_cast<std::size_t>(exponent) + 1);
    const std::string frac = digits.substr(static_cast<std::size_t>(exponent) + 1);
    if (!frac.empty()) out += "." + frac;
    out = trim_trailing_zeros(out);
  } else if (exponent < 0 && exponent >= -4) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent) - 1, '0') + digits;
    out = trim_trailing_zeros(out);
  } else {
    std::string mantissa = digits.substr(0, 1) + "." + digits.substr(1);
    out = trim_trailing_zeros(mantissa) + "e" + std::to_string(exponent);
  }
  return negative ? "-" + out : out;
}

// Shortest decimal that parses back to the same double.
inline std::string round_trip_number(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  if (result.ec != std::errc())
    throw std::runtime_error("shortest round-trip rendering failed");
  return std::string(buf, result.ptr);
}

}  // namespace epath
