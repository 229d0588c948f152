// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Time values: plain reals ("0.75", "1e-3") or rational multiples of pi
// ("pi", "3pi/4", "-pi/2", "2*pi", "5pi/12").

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "qwalk/error.hpp"

namespace qwalk {

struct PiRational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};

namespace detail {

inline std::optional<std::int64_t> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    if (value > (INT64_MAX - 9) / 10) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace detail

/// Parses "[-][k][*]pi[/m]" into the reduced fraction k/m; nullopt if `text`
/// does not mention pi.
inline std::optional<PiRational> parse_pi_rational(std::string_view text) {
  const auto pos = text.find("pi");
  if (pos == std::string_view::npos) return std::nullopt;
  std::string_view head = text.substr(0, pos);
  std::string_view tail = text.substr(pos + 2);
  bool negative = false;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    negative = head.front() == '-';
    head.remove_prefix(1);
  }
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  std::int64_t num = 1;
  if (!head.empty()) {
    const auto v = detail::parse_integer(head);
    detail::require(v.has_value(), ErrorKind::parse_error, "bad pi multiple '" + std::string(text) + "'");
    num = *v;
  }
  std::int64_t den = 1;
  if (!tail.empty()) {
    detail::require(tail.front() == '/', ErrorKind::parse_error, "bad pi fraction '" + std::string(text) + "'");
    const auto v = detail::parse_integer(tail.substr(1));
    detail::require(v.has_value() && *v > 0, ErrorKind::parse_error,
                    "bad pi denominator '" + std::string(text) + "'");
    den = *v;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return PiRational{negative ? -num : num, den};
}

inline double parse_time(std::string_view text) {
  detail::require(!text.empty(), ErrorKind::parse_error, "empty time value");
  if (auto r = parse_pi_rational(text)) {
    return std::numbers::pi * static_cast<double>(r->numerator) / static_cast<double>(r->denominator);
  }
  const std::string owned(text);
  char* end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  detail::require(end != owned.c_str() && *end == '\0' && std::isfinite(value), ErrorKind::parse_error,
                  "bad time value '" + owned + "'");
  return value;
}

/// "3pi/4" style label when t is within 1e-9 of k pi / m for some m <= 64.
inline std::optional<std::string> pi_label(double t) {
  if (t == 0.0) return "0";
  const double ratio = t / std::numbers::pi;
  for (std::int64_t den = 1; den <= 64; ++den) {
    const double scaled = ratio * static_cast<double>(den);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-9 * static_cast<double>(den)) continue;
    const auto num = static_cast<std::int64_t>(rounded);
    std::string out = num == 1 ? "" : num == -1 ? "-" : std::to_string(num);
    out += "pi";
    if (den > 1) out += "/" + std::to_string(den);
    return out;
  }
  return std::nullopt;
}

}  // namespace qwalk
