// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "socsim/errors.hpp"

namespace socsim {

/// Exact rational number used wherever chained arithmetic must reproduce
/// printed integers (TCO tables, Amdahl fits).
using Exact = boost::multiprecision::cpp_rational;

/// Shortest decimal text that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Parses a plain decimal literal ("12", "-0.0786", "1e3" is rejected).
inline std::optional<Exact> try_parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  boost::multiprecision::cpp_int num = 0;
  boost::multiprecision::cpp_int den = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    seen_digit = true;
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
  }
  if (!seen_digit) return std::nullopt;
  Exact r(num, den);
  return negative ? Exact(-r) : r;
}

inline Exact parse_decimal(std::string_view text) {
  auto r = try_parse_decimal(text);
  if (!r) throw InvalidArgument("not a decimal literal: '" + std::string(text) + "'");
  return *r;
}

/// Exact value of the shortest decimal that names `v` (0.0786 -> 786/10000,
/// not the binary approximation).
inline Exact exact_from_double(double v) {
  std::string s = format_double(v);
  if (auto r = try_parse_decimal(s)) return *r;
  // Exponent notation from to_chars: fall back to mantissa * 10^exp.
  auto e = s.find_first_of("eE");
  if (e == std::string::npos) throw InvalidArgument("cannot represent " + s + " exactly");
  Exact mant = parse_decimal(s.substr(0, e));
  int exp = std::stoi(s.substr(e + 1));
  boost::multiprecision::cpp_int scale = 1;
  for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) scale *= 10;
  return exp < 0 ? Exact(mant / Exact(scale)) : Exact(mant * Exact(scale));
}

inline double to_double(const Exact& x) { return x.convert_to<double>(); }

/// Round half away from zero, the convention used for printed table cells.
inline std::int64_t round_to_int(const Exact& x) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(x);
  cpp_int den = boost::multiprecision::denominator(x);
  bool neg = num < 0;
  if (neg) num = -num;
  cpp_int q = (2 * num + den) / (2 * den);
  return static_cast<std::int64_t>(neg ? -q : q);
}

}  // namespace socsim
