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

// Edge-list text format:
//
//   <n> <d> <family>
//   <u> <v>
//   ...
//
// Edges are listed once with u < v in ascending order. The family token is the
// family name followed by its parameters, dash separated: "complete-5",
// "multipartite-2-3", "cycle-7", "cayley-sym-4", "hypercube-3" or "custom".

#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

inline std::string family_token(const Family& family) {
  std::string token = family_name(family.kind);
  for (std::size_t p : family.parameters) token += "-" + std::to_string(p);
  return token;
}

inline Family parse_family_token(const std::string& token) {
  // "cayley-sym" itself contains a dash, so match known names by prefix.
  for (auto kind : {FamilyKind::cayley_symmetric, FamilyKind::complete, FamilyKind::multipartite,
                    FamilyKind::cycle, FamilyKind::hypercube, FamilyKind::custom}) {
    const std::string name = family_name(kind);
    if (token.rfind(name, 0) != 0) continue;
    std::string rest = token.substr(name.size());
    if (!rest.empty() && rest.front() != '-') continue;
    Family family{kind, {}};
    std::istringstream in(rest);
    char dash = 0;
    std::size_t value = 0;
    while (in >> dash) {
      detail::require(dash == '-' && static_cast<bool>(in >> value), ErrorKind::parse_error,
                      "bad family token '" + token + "'");
      family.parameters.push_back(value);
    }
    return family;
  }
  throw Error(ErrorKind::parse_error, "unknown family token '" + token + "'");
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.size() << ' ' << g.degree() << ' ' << family_token(g.family()) << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline Graph read_edge_list(std::istream& in) {
  std::size_t n = 0;
  std::size_t d = 0;
  std::string token;
  detail::require(static_cast<bool>(in >> n >> d >> token), ErrorKind::parse_error,
                  "edge list header must be 'n d family'");
  detail::require(n >= 1, ErrorKind::parse_error, "edge list needs n >= 1");
  const Family family = parse_family_token(token);
  const auto dim = static_cast<Eigen::Index>(n);
  AdjacencyMatrix adj = AdjacencyMatrix::Zero(dim, dim);
  std::size_t u = 0;
  std::size_t v = 0;
  while (in >> u >> v) {
    detail::require(u < n && v < n && u != v, ErrorKind::parse_error,
                    "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    adj(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1;
    adj(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1;
  }
  detail::require(in.eof(), ErrorKind::parse_error, "trailing garbage in edge list");
  Graph g(std::move(adj), family);
  detail::require(g.degree() == d, ErrorKind::parse_error,
                  "declared degree " + std::to_string(d) + " does not match edges");
  return g;
}

inline Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace qwalk
