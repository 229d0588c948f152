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

// Instantaneous uniform mixing: exact certification for complete and balanced
// multipartite graphs, and numeric time scans for everything else.
//
// A walk mixes when some t > 0 gives P_t(j) = 1/n for every vertex. Scans
// accept TV(P_t, uniform) <= eps as numerically uniform.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/error.hpp"
#include "qwalk/golden_section.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class Verdict { mixes, does_not_mix_certified, no_mixing_found_evidence };
enum class CertificationRoute { closed_form, numeric };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::mixes: return "mixes";
    case Verdict::does_not_mix_certified: return "does-not-mix-certified";
    case Verdict::no_mixing_found_evidence: return "no-mixing-found-evidence";
  }
  return "no-mixing-found-evidence";
}

inline std::string certification_route_name(CertificationRoute r) {
  return r == CertificationRoute::closed_form ? "closed-form" : "numeric";
}

struct MixingReport {
  Family graph;
  Verdict verdict = Verdict::no_mixing_found_evidence;
  std::vector<double> witness_times;
  double min_distance = 1.0;  // TV to uniform
  double argmin_time = 0.0;
  double deficit = 0.0;       // certified lower bound on max_j |P_t(j) - 1/n|
  double window_start = 0.0;
  double window_end = 0.0;
  double grid_step = 0.0;     // 0 for closed-form reports
  double tolerance = 0.0;
  CertificationRoute route = CertificationRoute::numeric;
  std::vector<std::string> notes;

  bool operator==(const MixingReport&) const = default;
};

inline constexpr double kCertifyTolerance = 1e-9;
inline constexpr double kScanTolerance = 1e-6;
inline constexpr double kRefineWidth = 1e-12;
inline constexpr std::size_t kMaxGridPoints = 10'000'000;

/// (1/2) sum_j |p_j - 1/n|.
inline double tv_to_uniform(const Eigen::VectorXd& dist) {
  detail::require(dist.size() > 0, ErrorKind::invalid_dimension, "empty distribution");
  detail::require(std::abs(dist.sum() - 1.0) <= 1e-9, ErrorKind::contract_violation,
                  "distribution does not sum to 1");
  const double u = 1.0 / static_cast<double>(dist.size());
  return 0.5 * (dist.array() - u).abs().sum();
}

inline double max_deviation_from_uniform(const Eigen::VectorXd& dist) {
  const double u = 1.0 / static_cast<double>(dist.size());
  return (dist.array() - u).abs().maxCoeff();
}

/// Smallest T > 0 with P_{t+T} = P_t for every start vertex, when the family
/// has commensurate spectrum with a known formula.
inline std::optional<double> probability_period(const Family& family) {
  constexpr double pi = std::numbers::pi;
  const auto& p = family.parameters;
  switch (family.kind) {
    case FamilyKind::complete: {
      const double n = static_cast<double>(p.at(0));
      return 2.0 * pi * (n - 1.0) / n;
    }
    case FamilyKind::multipartite: {
      const double a = static_cast<double>(p.at(0));
      if (p.at(1) == 1) return 2.0 * pi * (a - 1.0) / a;
      // Spectrum {1, -1/(a-1), 0}: gaps 1 and 1/(a-1).
      return 2.0 * pi * (a - 1.0);
    }
    case FamilyKind::hypercube: return pi * static_cast<double>(p.at(0));
    default: return std::nullopt;
  }
}

/// Window for a scan when none is given: one period for periodic families,
/// otherwise 100 n.
inline double default_scan_window(const Graph& g) {
  if (auto period = probability_period(g.family())) return *period;
  return 100.0 * static_cast<double>(g.size());
}

/// 1e-3 * window / (2 pi), coarsened to stay within the grid-point cap.
inline double default_grid_step(double window) {
  const double step = 1e-3 * window / (2.0 * std::numbers::pi);
  return std::max(step, window / static_cast<double>(kMaxGridPoints - 1));
}

/// QWALK_THREADS when set to a positive integer, else hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("QWALK_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Closed-form certification.

inline MixingReport certify_complete(std::size_t n) {
  detail::require(n >= 2, ErrorKind::invalid_parameter, "complete graph needs n >= 2");
  const double nd = static_cast<double>(n);
  const double period = *probability_period(Family{FamilyKind::complete, {n}});

  MixingReport r;
  r.graph = Family{FamilyKind::complete, {n}};
  r.route = CertificationRoute::closed_form;
  r.window_end = period;
  r.tolerance = kCertifyTolerance;
  // Non-start vertices carry (4/n^2) sin^2(theta), theta = t n / (2(n-1)).
  // Uniform iff sin^2(theta) = n/4, solvable only for n <= 4.
  const double theta_to_t = 2.0 * (nd - 1.0) / nd;
  if (n <= 4) {
    const double theta = std::asin(std::min(1.0, std::sqrt(nd) / 2.0));
    r.verdict = Verdict::mixes;
    r.witness_times.push_back(theta * theta_to_t);
    if (n < 4) r.witness_times.push_back((std::numbers::pi - theta) * theta_to_t);
    r.min_distance = 0.0;
    r.argmin_time = r.witness_times.front();
    r.deficit = 0.0;
  } else {
    r.verdict = Verdict::does_not_mix_certified;
    r.deficit = (nd - 4.0) / (nd * nd);
    // TV = (n-1)(1/n - P_t(j)), smallest when sin^2 = 1.
    r.min_distance = (nd - 1.0) * r.deficit;
    r.argmin_time = std::numbers::pi / 2.0 * theta_to_t;
    r.notes.push_back("non-start probabilities never exceed 4/n^2");
  }
  return r;
}

inline MixingReport certify_multipartite(std::size_t a, std::size_t b) {
  detail::require(a >= 2, ErrorKind::degenerate_graph, "multipartite graph needs a >= 2");
  detail::require(b >= 1, ErrorKind::invalid_parameter, "block size must be >= 1");
  if (b == 1) {
    MixingReport r = certify_complete(a);
    r.notes.push_back("multipartite(" + std::to_string(a) + ",1) is the complete graph K_" +
                      std::to_string(a));
    return r;
  }
  const double ad = static_cast<double>(a);
  const double n = ad * static_cast<double>(b);
  const double period = *probability_period(Family{FamilyKind::multipartite, {a, b}});

  MixingReport r;
  r.graph = Family{FamilyKind::multipartite, {a, b}};
  r.route = CertificationRoute::closed_form;
  r.window_end = period;
  r.tolerance = kCertifyTolerance;
  // Other-block vertices carry (4/(ab)^2) sin^2(t a / (2(a-1))); uniformity
  // forces sin^2 = ab/4, so ab <= 4, which with a, b >= 2 leaves only (2,2).
  const double theta_to_t = 2.0 * (ad - 1.0) / ad;
  if (a * b <= 4) {
    r.verdict = Verdict::mixes;
    for (double t = std::numbers::pi / 2.0 * theta_to_t; t < period; t += std::numbers::pi * theta_to_t) {
      r.witness_times.push_back(t);
    }
    r.min_distance = 0.0;
    r.argmin_time = r.witness_times.front();
  } else {
    r.verdict = Verdict::does_not_mix_certified;
    r.deficit = (n - 4.0) / (n * n);
    // Every other-block vertex sits at least `deficit` below 1/n.
    r.min_distance = (n - static_cast<double>(b)) * r.deficit;
    r.argmin_time = std::numbers::pi / 2.0 * theta_to_t;
    r.notes.push_back("other-block probabilities never exceed 4/(ab)^2");
    r.notes.push_back("min_distance is a certified lower bound on TV");
  }
  return r;
}

// Numeric scans.

struct ScanOptions {
  bool all_witnesses = false;
  unsigned threads = 0;  // 0 -> default_thread_count()
  double refine_width = kRefineWidth;
};

namespace detail {

inline std::vector<double> scan_grid(double window, double step) {
  require(window > 0.0, ErrorKind::invalid_window, "window must be > 0");
  require(step > 0.0 && step <= window, ErrorKind::invalid_window, "step must be in (0, window]");
  const double count = std::floor(window / step + 1e-9);
  require(count + 2.0 <= static_cast<double>(kMaxGridPoints), ErrorKind::invalid_window,
          "grid exceeds " + std::to_string(kMaxGridPoints) + " points");
  const auto last = static_cast<std::size_t>(count);
  std::vector<double> grid;
  grid.reserve(last + 2);
  for (std::size_t k = 0; k <= last; ++k) grid.push_back(static_cast<double>(k) * step);
  if (window - grid.back() > 1e-12 * window) grid.push_back(window);
  return grid;
}

// Evaluates f over `xs` split into contiguous chunks, one per thread; results
// land at their grid index so completion order does not matter.
template <class F>
std::vector<double> parallel_map(const std::vector<double>& xs, unsigned threads, F&& f) {
  std::vector<double> out(xs.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, xs.size() / 1024 + 1));
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) out[k] = f(xs[k]);
  };
  if (workers == 1) {
    run(0, xs.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (xs.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(xs.size(), begin + chunk);
    if (begin < end) pool.emplace_back(run, begin, end);
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace detail

/// Grid scan of TV(P_t, uniform) over [0, window] followed by golden-section
/// refinement around every local grid minimum.
inline MixingReport scan_mixing(const Walk& walk, const Family& family, double window, double step,
                                double eps, const ScanOptions& options = {}) {
  detail::require(eps > 0.0, ErrorKind::invalid_window, "eps must be > 0");
  const std::vector<double> grid = detail::scan_grid(window, step);
  const auto tv_at = [&walk](double t) { return tv_to_uniform(walk.probabilities(t)); };
  const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
  const std::vector<double> tv = detail::parallel_map(grid, threads, tv_at);

  MixingReport r;
  r.graph = family;
  r.route = CertificationRoute::numeric;
  r.window_end = window;
  r.grid_step = step;
  r.tolerance = eps;
  r.min_distance = std::numeric_limits<double>::infinity();

  std::vector<double> witnesses;
  const std::size_t last = grid.size() - 1;
  for (std::size_t k = 0; k <= last; ++k) {
    const bool left_ok = k == 0 || tv[k] <= tv[k - 1];
    const bool right_ok = k == last || tv[k] <= tv[k + 1];
    if (!(left_ok && right_ok)) continue;
    const double lo = grid[k == 0 ? 0 : k - 1];
    const double hi = grid[k == last ? last : k + 1];
    const ScalarMinimum m =
        golden_section_minimize(tv_at, lo, hi, options.refine_width, ScalarMinimum{grid[k], tv[k]});
    if (m.value < r.min_distance) {
      r.min_distance = m.value;
      r.argmin_time = m.x;
    }
    if (m.value <= eps && m.x > 0.0) witnesses.push_back(m.x);
  }

  std::sort(witnesses.begin(), witnesses.end());
  for (double t : witnesses) {
    if (r.witness_times.empty() || t - r.witness_times.back() > 1e-7) r.witness_times.push_back(t);
  }
  if (!options.all_witnesses && r.witness_times.size() > 1) r.witness_times.resize(1);
  r.verdict = r.witness_times.empty() ? Verdict::no_mixing_found_evidence : Verdict::mixes;
  if (r.verdict == Verdict::no_mixing_found_evidence) {
    r.notes.push_back("finite window scan: evidence only, not a proof");
  }
  return r;
}

/// Scans from vertex 0 under H = A/d. Periodic families report every witness
/// inside the window, others only the first.
inline MixingReport scan_mixing(const Graph& g, double window, double step, double eps,
                                std::optional<ScanOptions> options = std::nullopt) {
  ScanOptions opts = options.value_or(ScanOptions{});
  if (!options) opts.all_witnesses = probability_period(g.family()).has_value();
  return scan_mixing(Walk(g), g.family(), window, step, eps, opts);
}

struct CrossCheck {
  bool agrees = false;
  MixingReport scan;
};

/// Re-derives a closed-form verdict by scanning one probability period.
inline CrossCheck numeric_cross_check(const MixingReport& certified, const ScanOptions& options = {}) {
  detail::require(certified.route == CertificationRoute::closed_form, ErrorKind::invalid_parameter,
                  "cross check expects a closed-form report");
  const Graph g = make_graph(certified.graph);
  ScanOptions opts = options;
  opts.all_witnesses = true;
  const double window = certified.window_end;
  CrossCheck out{false, scan_mixing(Walk(g), certified.graph, window, default_grid_step(window),
                                    certified.tolerance, opts)};
  if (certified.verdict == Verdict::mixes) {
    out.agrees = out.scan.verdict == Verdict::mixes;
    for (double t : certified.witness_times) {
      const bool found = std::any_of(out.scan.witness_times.begin(), out.scan.witness_times.end(),
                                     [t](double s) { return std::abs(s - t) <= 1e-6; });
      out.agrees = out.agrees && found;
    }
  } else {
    out.agrees = out.scan.verdict != Verdict::mixes &&
                 out.scan.min_distance >= certified.min_distance - 1e-6;
  }
  return out;
}

/// Batch of scans over a family range. `window` and `step` of 0 select the
/// defaults per member.
inline std::vector<MixingReport> conjecture_evidence(FamilyKind kind,
                                                     const std::vector<std::size_t>& parameters,
                                                     double window = 0.0, double step = 0.0,
                                                     double eps = kScanTolerance) {
  detail::require(kind == FamilyKind::cycle || kind == FamilyKind::cayley_symmetric,
                  ErrorKind::invalid_parameter, "evidence sweeps cover cycle and cayley-sym only");
  std::vector<MixingReport> out;
  for (std::size_t p : parameters) {
    const Graph g = make_graph(Family{kind, {p}});
    const double w = window > 0.0 ? window : default_scan_window(g);
    const double s = step > 0.0 ? step : default_grid_step(w);
    MixingReport r = scan_mixing(g, w, s, eps);
    if (kind == FamilyKind::cayley_symmetric && p == 3) {
      r.notes.push_back("X_3 is isomorphic to K_{3,3} = multipartite(2,3), certified non-mixing");
    }
    if (kind == FamilyKind::cycle && p == 3) r.notes.push_back("C_3 = K_3");
    if (kind == FamilyKind::cycle && p == 4) r.notes.push_back("C_4 = K_{2,2}");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qwalk
