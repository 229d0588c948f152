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

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace qwalk {

/// J_0(x) .. J_max_order(x) for integer orders by Miller's backward recurrence,
/// normalized with J_0 + 2 sum_k J_{2k} = 1. Stable for every order and any
/// real x; accuracy is near machine precision relative to max |J_k|.
inline std::vector<double> bessel_j_orders(std::size_t max_order, double x) {
  std::vector<double> out(max_order + 1, 0.0);
  const double ax = std::abs(x);
  if (ax == 0.0) {
    out[0] = 1.0;
    return out;
  }

  const double reach = std::max(static_cast<double>(max_order), std::ceil(ax));
  auto start = static_cast<std::size_t>(reach + 32.0 + 4.0 * std::ceil(std::sqrt(reach)));
  start += start % 2;  // even, so the normalization sum ends on J_0

  constexpr double kRescaleAbove = 1e250;
  double upper = 0.0;  // J_{k+1}
  double current = 1e-300;  // J_k, arbitrary seed at k = start
  double norm = 0.0;
  for (std::size_t k = start; k > 0; --k) {
    if (k <= max_order) out[k] = current;
    if (k % 2 == 0) norm += 2.0 * current;
    const double lower = 2.0 * static_cast<double>(k) / ax * current - upper;
    upper = current;
    current = lower;
    if (std::abs(current) > kRescaleAbove) {
      current /= kRescaleAbove;
      upper /= kRescaleAbove;
      norm /= kRescaleAbove;
      for (std::size_t j = k; j <= std::min(max_order, start); ++j) out[j] /= kRescaleAbove;
    }
  }
  out[0] = current;
  norm += current;
  for (double& v : out) v /= norm;

  if (x < 0.0) {
    for (std::size_t k = 1; k <= max_order; k += 2) out[k] = -out[k];
  }
  return out;
}

/// J_order(x) for a signed integer order, using J_{-k} = (-1)^k J_k.
inline double bessel_j(long order, double x) {
  const auto k = static_cast<std::size_t>(order < 0 ? -order : order);
  const double value = bessel_j_orders(k, x)[k];
  return (order < 0 && k % 2 == 1) ? -value : value;
}

}  // namespace qwalk
