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

// Regular graph families and their walk Hamiltonians.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/error.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

enum class FamilyKind { complete, multipartite, cycle, cayley_symmetric, hypercube, custom };

struct Family {
  FamilyKind kind = FamilyKind::custom;
  std::vector<std::size_t> parameters;

  bool operator==(const Family&) const = default;
};

inline std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::multipartite: return "multipartite";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::cayley_symmetric: return "cayley-sym";
    case FamilyKind::hypercube: return "hypercube";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

inline std::optional<FamilyKind> parse_family_name(const std::string& name) {
  for (auto kind : {FamilyKind::complete, FamilyKind::multipartite, FamilyKind::cycle,
                    FamilyKind::cayley_symmetric, FamilyKind::hypercube, FamilyKind::custom}) {
    if (family_name(kind) == name) return kind;
  }
  return std::nullopt;
}

/// Human-readable label such as K_5, K_{2x3}, C_7, X_4 or Q_3.
inline std::string family_label(const Family& family) {
  const auto& p = family.parameters;
  auto s = [](std::size_t v) { return std::to_string(v); };
  switch (family.kind) {
    case FamilyKind::complete: return "K_" + s(p.at(0));
    case FamilyKind::multipartite: return "K_{" + s(p.at(0)) + "x" + s(p.at(1)) + "}";
    case FamilyKind::cycle: return "C_" + s(p.at(0));
    case FamilyKind::cayley_symmetric: return "X_" + s(p.at(0));
    case FamilyKind::hypercube: return "Q_" + s(p.at(0));
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

using AdjacencyMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Simple undirected regular graph with a dense 0/1 adjacency matrix.
class Graph {
 public:
  /// Validates symmetry, zero diagonal, 0/1 entries and regularity.
  Graph(AdjacencyMatrix adjacency, Family family)
      : adjacency_(std::move(adjacency)), family_(std::move(family)) {
    const Eigen::Index n = adjacency_.rows();
    detail::require(n >= 1 && adjacency_.cols() == n, ErrorKind::invalid_dimension,
                    "adjacency must be square and nonempty");
    for (Eigen::Index r = 0; r < n; ++r) {
      detail::require(adjacency_(r, r) == 0, ErrorKind::invalid_parameter,
                      "adjacency has a self loop");
      for (Eigen::Index c = 0; c < n; ++c) {
        detail::require(adjacency_(r, c) <= 1, ErrorKind::invalid_parameter,
                        "adjacency entries must be 0 or 1");
        detail::require(adjacency_(r, c) == adjacency_(c, r), ErrorKind::invalid_parameter,
                        "adjacency is not symmetric");
      }
    }
    degree_ = row_degree(0);
    for (Eigen::Index r = 1; r < n; ++r) {
      detail::require(row_degree(r) == degree_, ErrorKind::invalid_parameter,
                      "graph is not regular");
    }
    detail::require(degree_ > 0, ErrorKind::degenerate_graph,
                    "graph has no edges; H = A/d is undefined");
  }

  std::size_t size() const { return static_cast<std::size_t>(adjacency_.rows()); }
  std::size_t degree() const { return degree_; }
  const Family& family() const { return family_; }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }

  bool has_edge(std::size_t u, std::size_t v) const {
    return adjacency_(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) != 0;
  }

  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (has_edge(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::size_t edge_count() const { return size() * degree_ / 2; }

  bool is_connected() const {
    std::vector<bool> seen(size(), false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < size(); ++v) {
        if (!seen[v] && has_edge(u, v)) {
          seen[v] = true;
          ++reached;
          frontier.push(v);
        }
      }
    }
    return reached == size();
  }

  Eigen::MatrixXd adjacency_real() const { return adjacency_.cast<double>(); }

 private:
  std::size_t row_degree(Eigen::Index r) const {
    std::size_t d = 0;
    for (Eigen::Index c = 0; c < adjacency_.cols(); ++c) d += adjacency_(r, c);
    return d;
  }

  AdjacencyMatrix adjacency_;
  Family family_;
  std::size_t degree_ = 0;
};

inline Graph complete_graph(std::size_t n) {
  detail::require(n >= 2, ErrorKind::invalid_parameter, "complete graph needs n >= 2");
  const auto dim = static_cast<Eigen::Index>(n);
  AdjacencyMatrix a = AdjacencyMatrix::Ones(dim, dim);
  a.diagonal().setZero();
  return Graph(std::move(a), Family{FamilyKind::complete, {n}});
}

/// Complete a-partite graph with blocks of b vertices; vertex v lies in block v / b.
inline Graph balanced_multipartite(std::size_t a, std::size_t b) {
  detail::require(a >= 2, ErrorKind::degenerate_graph,
                  "multipartite graph needs a >= 2 blocks (a = 1 is edgeless)");
  detail::require(b >= 1, ErrorKind::invalid_parameter, "block size must be >= 1");
  if (b == 1) return complete_graph(a);
  const auto dim = static_cast<Eigen::Index>(a * b);
  AdjacencyMatrix adj(dim, dim);
  for (Eigen::Index u = 0; u < dim; ++u) {
    for (Eigen::Index v = 0; v < dim; ++v) {
      adj(u, v) = (u / static_cast<Eigen::Index>(b)) != (v / static_cast<Eigen::Index>(b)) ? 1 : 0;
    }
  }
  return Graph(std::move(adj), Family{FamilyKind::multipartite, {a, b}});
}

inline Graph cycle_graph(std::size_t n) {
  detail::require(n >= 3, ErrorKind::invalid_parameter, "cycle needs n >= 3");
  const auto dim = static_cast<Eigen::Index>(n);
  AdjacencyMatrix adj = AdjacencyMatrix::Zero(dim, dim);
  for (Eigen::Index v = 0; v < dim; ++v) {
    adj(v, (v + 1) % dim) = 1;
    adj((v + 1) % dim, v) = 1;
  }
  return Graph(std::move(adj), Family{FamilyKind::cycle, {n}});
}

inline constexpr std::size_t kMaxCayleyOrder = 5;
inline constexpr std::size_t kMaxHypercubeDimension = 12;

/// All permutations of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> permutations_lex(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Sign of a permutation in one-line notation: +1 even, -1 odd.
inline int permutation_sign(const std::vector<std::size_t>& p) {
  std::vector<bool> visited(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (visited[i]) continue;
    std::size_t length = 0;
    for (std::size_t j = i; !visited[j]; j = p[j]) {
      visited[j] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Cayley graph of S_n generated by all transpositions, edges (pi, tau pi).
///
/// Vertex ids follow the lexicographic order of permutations in one-line
/// notation. Composition is (tau pi)(i) = tau(pi(i)), so tau swaps values.
inline Graph cayley_symmetric(std::size_t n) {
  detail::require(n >= 2, ErrorKind::invalid_parameter, "cayley graph needs n >= 2");
  detail::require(n <= kMaxCayleyOrder, ErrorKind::size_limit,
                  "cayley graph limited to n <= " + std::to_string(kMaxCayleyOrder));
  const auto perms = permutations_lex(n);
  std::map<std::vector<std::size_t>, Eigen::Index> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Eigen::Index>(i));

  const auto dim = static_cast<Eigen::Index>(perms.size());
  AdjacencyMatrix adj = AdjacencyMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        std::vector<std::size_t> image = perms[i];
        for (auto& value : image) {
          if (value == x) value = y;
          else if (value == y) value = x;
        }
        adj(static_cast<Eigen::Index>(i), index.at(image)) = 1;
      }
    }
  }
  return Graph(std::move(adj), Family{FamilyKind::cayley_symmetric, {n}});
}

inline Graph hypercube_graph(std::size_t d) {
  detail::require(d >= 1, ErrorKind::invalid_parameter, "hypercube needs d >= 1");
  detail::require(d <= kMaxHypercubeDimension, ErrorKind::size_limit,
                  "hypercube limited to d <= " + std::to_string(kMaxHypercubeDimension));
  const std::size_t n = std::size_t{1} << d;
  const auto dim = static_cast<Eigen::Index>(n);
  AdjacencyMatrix adj = AdjacencyMatrix::Zero(dim, dim);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t bit = 0; bit < d; ++bit) {
      adj(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(u ^ (std::size_t{1} << bit))) = 1;
    }
  }
  return Graph(std::move(adj), Family{FamilyKind::hypercube, {d}});
}

/// Rebuilds a family graph from its tag.
inline Graph make_graph(const Family& family) {
  const auto& p = family.parameters;
  auto arity = [&](std::size_t k) {
    detail::require(p.size() == k, ErrorKind::invalid_parameter,
                    family_name(family.kind) + " expects " + std::to_string(k) + " parameter(s)");
  };
  switch (family.kind) {
    case FamilyKind::complete: arity(1); return complete_graph(p[0]);
    case FamilyKind::multipartite: arity(2); return balanced_multipartite(p[0], p[1]);
    case FamilyKind::cycle: arity(1); return cycle_graph(p[0]);
    case FamilyKind::cayley_symmetric: arity(1); return cayley_symmetric(p[0]);
    case FamilyKind::hypercube: arity(1); return hypercube_graph(p[0]);
    case FamilyKind::custom: break;
  }
  throw Error(ErrorKind::invalid_parameter, "custom graphs cannot be rebuilt from a tag");
}

enum class Normalization {
  adjacency_over_degree,  // H = A / d
  laplacian,              // L = A - D
  lazy,                   // (I + A / d) / 2
};

inline std::string normalization_name(Normalization n) {
  switch (n) {
    case Normalization::adjacency_over_degree: return "adjacency-over-d";
    case Normalization::laplacian: return "laplacian";
    case Normalization::lazy: return "lazy";
  }
  return "adjacency-over-d";
}

struct Hamiltonian {
  ComplexMatrix matrix;
  Normalization normalization = Normalization::adjacency_over_degree;
};

/// Maps an eigenvalue of A/d to the matching eigenvalue of the requested form.
inline double normalize_eigenvalue(double adjacency_over_degree, std::size_t degree,
                                   Normalization normalization) {
  switch (normalization) {
    case Normalization::adjacency_over_degree: return adjacency_over_degree;
    case Normalization::laplacian:
      return static_cast<double>(degree) * (adjacency_over_degree - 1.0);
    case Normalization::lazy: return 0.5 * (1.0 + adjacency_over_degree);
  }
  return adjacency_over_degree;
}

inline Hamiltonian hamiltonian(const Graph& g,
                               Normalization normalization = Normalization::adjacency_over_degree) {
  const Eigen::MatrixXd a = g.adjacency_real();
  const auto d = static_cast<double>(g.degree());
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd h;
  switch (normalization) {
    case Normalization::adjacency_over_degree: h = a / d; break;
    case Normalization::laplacian: h = a - d * Eigen::MatrixXd::Identity(n, n); break;
    case Normalization::lazy: h = 0.5 * (Eigen::MatrixXd::Identity(n, n) + a / d); break;
  }
  return Hamiltonian{ComplexMatrix::hermitian(h.cast<Complex>()), normalization};
}

/// Backtracking search for a vertex map p with adj_g(u,v) == adj_h(p(u),p(v)).
/// Returns p indexed by vertices of g, or nullopt when the graphs differ.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.size() != h.size() || g.degree() != h.degree()) return std::nullopt;
  detail::require(g.size() <= 24, ErrorKind::size_limit, "isomorphism search limited to 24 vertices");
  const std::size_t n = g.size();
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t candidate = 0; candidate < n; ++candidate) {
      if (used[candidate]) continue;
      bool consistent = true;
      for (std::size_t w = 0; w < u && consistent; ++w) {
        consistent = g.has_edge(u, w) == h.has_edge(candidate, map[w]);
      }
      if (!consistent) continue;
      used[candidate] = true;
      map[u] = candidate;
      if (self(self, u + 1)) return true;
      used[candidate] = false;
    }
    return false;
  };
  if (extend(extend, 0)) return map;
  return std::nullopt;
}

}  // namespace qwalk
