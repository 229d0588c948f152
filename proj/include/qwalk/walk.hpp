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

// Continuous-time quantum walk psi_t = exp(-iHt) psi_0 (hbar = 1).
//
// The generic engine picks a diagonalization route from the graph family:
// Fourier basis for circulants (complete graphs, cycles), Kronecker factors
// for multipartite graphs and hypercubes, and a dense eigensolver otherwise.
// Closed-form amplitudes for complete, multipartite and cycle graphs are
// provided separately so the two routes can check each other.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/bessel.hpp"
#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

enum class SpectralRoute { circulant, kronecker, dense };

inline std::string route_name(SpectralRoute route) {
  switch (route) {
    case SpectralRoute::circulant: return "circulant";
    case SpectralRoute::kronecker: return "kronecker";
    case SpectralRoute::dense: return "dense";
  }
  return "dense";
}

struct WalkSpectrum {
  SpectralDecomposition decomposition;
  SpectralRoute route = SpectralRoute::dense;
};

namespace detail {

inline SpectralDecomposition remap_eigenvalues(SpectralDecomposition d, std::size_t degree,
                                               Normalization normalization) {
  for (Eigen::Index j = 0; j < d.eigenvalues.size(); ++j) {
    d.eigenvalues(j) = normalize_eigenvalue(d.eigenvalues(j), degree, normalization);
  }
  return sorted(std::move(d.eigenvalues), std::move(d.eigenvectors));
}

inline ComplexVector first_column(const Graph& g) {
  ComplexVector f(static_cast<Eigen::Index>(g.size()));
  const double d = static_cast<double>(g.degree());
  for (std::size_t k = 0; k < g.size(); ++k) {
    f(static_cast<Eigen::Index>(k)) = g.has_edge(k, 0) ? 1.0 / d : 0.0;
  }
  return f;
}

// Normalized K_a / (a-1) tensor J_b / b.
inline SpectralDecomposition multipartite_decomposition(std::size_t a, std::size_t b) {
  ComplexVector fa = ComplexVector::Constant(static_cast<Eigen::Index>(a), 1.0 / static_cast<double>(a - 1));
  fa(0) = 0.0;
  const ComplexVector fb = ComplexVector::Constant(static_cast<Eigen::Index>(b), 1.0 / static_cast<double>(b));
  const SpectralDecomposition da = circulant_decomposition(fa);
  const SpectralDecomposition db = circulant_decomposition(fb);

  RealVector values(static_cast<Eigen::Index>(a * b));
  for (Eigen::Index i = 0; i < da.size(); ++i) {
    for (Eigen::Index k = 0; k < db.size(); ++k) {
      values(i * db.size() + k) = da.eigenvalues(i) * db.eigenvalues(k);
    }
  }
  const ComplexMatrix vectors =
      kronecker(ComplexMatrix(da.eigenvectors), ComplexMatrix(db.eigenvectors));
  return sorted(std::move(values), vectors.entries());
}

// (1/d) sum_i X_i acting on d qubits; eigenvectors are tensor powers of the
// K_2 eigenbasis and eigenvalues are averages of +-1.
inline SpectralDecomposition hypercube_decomposition(std::size_t d) {
  const SpectralDecomposition k2 = circulant_decomposition(ComplexVector::Unit(2, 1));
  ComplexMatrix vectors(k2.eigenvectors);
  RealVector values = k2.eigenvalues;
  for (std::size_t level = 1; level < d; ++level) {
    vectors = kronecker(vectors, ComplexMatrix(k2.eigenvectors));
    RealVector next(values.size() * 2);
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      for (Eigen::Index k = 0; k < 2; ++k) next(i * 2 + k) = values(i) + k2.eigenvalues(k);
    }
    values = std::move(next);
  }
  values /= static_cast<double>(d);
  return sorted(std::move(values), vectors.entries());
}

}  // namespace detail

/// Spectral decomposition of the walk Hamiltonian of `g` in the requested form.
inline WalkSpectrum walk_spectrum(const Graph& g,
                                  Normalization normalization = Normalization::adjacency_over_degree) {
  const auto& family = g.family();
  WalkSpectrum out;
  switch (family.kind) {
    case FamilyKind::complete:
    case FamilyKind::cycle:
      out.decomposition = circulant_decomposition(detail::first_column(g));
      out.route = SpectralRoute::circulant;
      break;
    case FamilyKind::multipartite:
      out.decomposition =
          detail::multipartite_decomposition(family.parameters.at(0), family.parameters.at(1));
      out.route = SpectralRoute::kronecker;
      break;
    case FamilyKind::hypercube:
      out.decomposition = detail::hypercube_decomposition(family.parameters.at(0));
      out.route = SpectralRoute::kronecker;
      break;
    case FamilyKind::cayley_symmetric:
    case FamilyKind::custom:
      out.decomposition = hermitian_eigendecomposition(hamiltonian(g).matrix);
      out.route = SpectralRoute::dense;
      break;
  }
  if (normalization != Normalization::adjacency_over_degree) {
    out.decomposition =
        detail::remap_eigenvalues(std::move(out.decomposition), g.degree(), normalization);
  }
  return out;
}

struct WalkState {
  double t = 0.0;
  ComplexVector amplitudes;
  RealVector probabilities;
};

/// Entrywise |amplitude|^2 of a normalized state.
inline RealVector collapse(const ComplexVector& amplitudes) {
  detail::require_state(amplitudes);
  return amplitudes.cwiseAbs2();
}

/// A walk on one graph from one start vertex, diagonalized once and
/// evaluated at many times. Safe to share read-only across threads.
class Walk {
 public:
  explicit Walk(const Graph& g, std::size_t start_vertex = 0,
                Normalization normalization = Normalization::adjacency_over_degree)
      : Walk(walk_spectrum(g, normalization), checked_start(g, start_vertex)) {}

  Walk(WalkSpectrum spectrum, const ComplexVector& psi0)
      : route_(spectrum.route), propagator_(std::move(spectrum.decomposition), psi0) {}

  ComplexVector amplitudes(double t) const { return propagator_.state(t); }
  RealVector probabilities(double t) const { return propagator_.probabilities(t); }
  WalkState state(double t) const {
    WalkState s{t, amplitudes(t), {}};
    s.probabilities = s.amplitudes.cwiseAbs2();
    return s;
  }

  SpectralRoute route() const { return route_; }
  const SpectralDecomposition& decomposition() const { return propagator_.decomposition(); }
  std::size_t size() const { return static_cast<std::size_t>(propagator_.dimension()); }

 private:
  static ComplexVector checked_start(const Graph& g, std::size_t start_vertex) {
    detail::require(start_vertex < g.size(), ErrorKind::invalid_vertex,
                    "start vertex " + std::to_string(start_vertex) + " >= n = " +
                        std::to_string(g.size()));
    return basis_state(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(start_vertex));
  }

  SpectralRoute route_;
  Propagator propagator_;
};

inline WalkState evolve(const Graph& g, double t, std::size_t start_vertex = 0,
                        Normalization normalization = Normalization::adjacency_over_degree) {
  return Walk(g, start_vertex, normalization).state(t);
}

// Closed forms, start vertex 0, H = A/d.

inline ComplexVector amplitudes_complete(std::size_t n, double t) {
  detail::require(n >= 2, ErrorKind::invalid_parameter, "complete graph needs n >= 2");
  const double nd = static_cast<double>(n);
  const Complex start = (std::polar(1.0, -t) + (nd - 1.0) * std::polar(1.0, t / (nd - 1.0))) / nd;
  // (e^{-it} - e^{it/(n-1)}) / n written as a phase times a sine.
  const double theta = t * nd / (2.0 * (nd - 1.0));
  const Complex other = Complex(0.0, -2.0 / nd) *
                        std::polar(1.0, -t * (nd - 2.0) / (2.0 * (nd - 1.0))) * std::sin(theta);
  ComplexVector out = ComplexVector::Constant(static_cast<Eigen::Index>(n), other);
  out(0) = start;
  return out;
}

/// Three amplitude classes: the start vertex, the rest of block 0, other blocks.
inline ComplexVector amplitudes_multipartite(std::size_t a, std::size_t b, double t) {
  detail::require(a >= 2 && b >= 2, ErrorKind::degenerate_graph,
                  "multipartite closed form needs a >= 2 and b >= 2");
  const double ad = static_cast<double>(a);
  const double bd = static_cast<double>(b);
  const Complex top = std::polar(1.0, -t);
  const Complex middle = std::polar(1.0, t / (ad - 1.0));
  const double scale = 1.0 / (ad * bd);
  ComplexVector out(static_cast<Eigen::Index>(a * b));
  for (std::size_t j = 0; j < a * b; ++j) {
    Complex value;
    if (j == 0) value = top + (ad - 1.0) * middle + ad * (bd - 1.0);
    else if (j < b) value = top + (ad - 1.0) * middle - ad;
    else value = top - middle;
    out(static_cast<Eigen::Index>(j)) = scale * value;
  }
  return out;
}

/// <k|psi_t> = (1/n) sum_j exp(-it cos(2 pi j / n)) omega^{jk}.
inline ComplexVector amplitudes_cycle(std::size_t n, double t) {
  detail::require(n >= 3, ErrorKind::invalid_parameter, "cycle needs n >= 3");
  std::vector<Complex> phases(n);
  for (std::size_t j = 0; j < n; ++j) {
    phases[j] = std::polar(1.0, -t * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                              static_cast<double>(n)));
  }
  ComplexVector out(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += phases[j] * detail::root_of_unity_power(n, j * k);
    out(static_cast<Eigen::Index>(k)) = acc / static_cast<double>(n);
  }
  return out;
}

/// max(60, ceil(t) + 20 ceil(t^{1/3})).
inline std::size_t default_bessel_truncation(double t) {
  const double at = std::abs(t);
  const double order = std::ceil(at) + 20.0 * std::ceil(std::cbrt(at));
  return std::max<std::size_t>(60, static_cast<std::size_t>(order));
}

inline constexpr double kBesselTailTolerance = 1e-10;

/// Cycle amplitudes as a Bessel series:
/// <k|psi_t> = sum over integers nu = k (mod n) of (-i)^nu J_nu(t), |nu| <= truncation.
///
/// Throws tolerance-unmet when the truncation is below ceil(|t|) + 40 or the
/// discarded tail is estimated above 1e-10.
inline ComplexVector amplitudes_cycle_bessel(std::size_t n, double t, std::size_t truncation) {
  detail::require(n >= 3, ErrorKind::invalid_parameter, "cycle needs n >= 3");
  detail::require(static_cast<double>(truncation) >= std::ceil(std::abs(t)) + 40.0,
                  ErrorKind::tolerance_unmet,
                  "bessel truncation " + std::to_string(truncation) + " below ceil(t) + 40");
  // Extra orders only feed the tail estimate.
  const std::size_t probe = truncation + 20 + 4 * static_cast<std::size_t>(std::ceil(std::cbrt(std::abs(t))));
  const std::vector<double> j = bessel_j_orders(probe, t);
  double tail = 0.0;
  for (std::size_t nu = truncation + 1; nu <= probe; ++nu) tail += 2.0 * std::abs(j[nu]);
  detail::require(tail <= kBesselTailTolerance, ErrorKind::tolerance_unmet,
                  "bessel series tail " + std::to_string(tail) + " exceeds tolerance");

  static constexpr Complex kMinusIPowers[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  const auto term = [&](long nu) {
    const auto k = static_cast<std::size_t>(nu < 0 ? -nu : nu);
    const double jv = (nu < 0 && k % 2 == 1) ? -j[k] : j[k];
    return kMinusIPowers[((nu % 4) + 4) % 4] * jv;
  };

  const auto limit = static_cast<long>(truncation);
  const auto period = static_cast<long>(n);
  ComplexVector out = ComplexVector::Zero(static_cast<Eigen::Index>(n));
  for (long k = 0; k < period; ++k) {
    Complex acc = 0.0;
    // Smallest nu >= -limit with nu = k (mod n).
    long nu = k - ((k + limit) / period) * period;
    for (; nu <= limit; nu += period) acc += term(nu);
    out(k) = acc;
  }
  return out;
}

inline ComplexVector amplitudes_cycle_bessel(std::size_t n, double t) {
  return amplitudes_cycle_bessel(n, t, default_bessel_truncation(t));
}

/// Rotates `v` by the unit phase that makes its largest-magnitude entry real
/// and positive. Two states equal up to global phase align to the same vector.
inline ComplexVector align_global_phase(const ComplexVector& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  const double magnitude = std::abs(v(idx));
  if (magnitude == 0.0) return v;
  return v * (std::conj(v(idx)) / magnitude);
}

/// max_k |a_k - c b_k| after aligning global phases.
inline double distance_up_to_phase(const ComplexVector& a, const ComplexVector& b) {
  detail::require(a.size() == b.size(), ErrorKind::dimension_mismatch, "length mismatch");
  // Align b onto a with the phase of <b|a>, robust when magnitudes tie.
  const Complex overlap = b.dot(a);
  const double magnitude = std::abs(overlap);
  const Complex phase = magnitude > 0.0 ? overlap / magnitude : Complex(1.0, 0.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace qwalk
