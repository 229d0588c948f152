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

#include "qwalk/error.hpp"

namespace qwalk {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than `width`.
///
/// `seed` is a known point in the bracket (usually the grid minimum); the
/// result is the best point evaluated, so it never exceeds `seed.value`.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double width, ScalarMinimum seed,
                                      std::size_t max_iterations = 200) {
  detail::require(lo <= hi, ErrorKind::invalid_window, "golden section needs lo <= hi");
  detail::require(width > 0.0, ErrorKind::invalid_window, "golden section needs width > 0");
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

  ScalarMinimum best = seed;
  auto consider = [&](double x, double fx) {
    if (fx < best.value) best = {x, fx};
  };

  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  consider(c, fc);
  consider(d, fd);
  for (std::size_t it = 0; it < max_iterations && (hi - lo) > width; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
      consider(c, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

}  // namespace qwalk
