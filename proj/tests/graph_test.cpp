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

#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "qwalk/edge_list.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"
#include "support/oracles.hpp"

namespace qwalk {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected qwalk::Error";
  return ErrorKind::parse_error;
}

bool same_adjacency_under(const Graph& g, const Graph& h, const std::vector<std::size_t>& map) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.has_edge(u, v) != h.has_edge(map[u], map[v])) return false;
    }
  }
  return true;
}

TEST(CompleteGraph, K2IsPauliX) {
  const Graph g = complete_graph(2);
  EXPECT_EQ(g.degree(), 1u);
  EXPECT_FALSE(g.has_edge(0, 0));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(1, 1));
}

TEST(CompleteGraph, Triangle) {
  const Graph g = complete_graph(3);
  for (Eigen::Index r = 0; r < 3; ++r) EXPECT_EQ(g.adjacency().row(r).cast<int>().sum(), 2);
}

TEST(CompleteGraph, K5EdgeCount) {
  const Graph g = complete_graph(5);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_EQ(g.edges().size(), 5u * 4u / 2u);
}

TEST(CompleteGraph, RejectsSmall) {
  EXPECT_EQ(kind_of([] { complete_graph(1); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { complete_graph(0); }), ErrorKind::invalid_parameter);
}

TEST(Multipartite, TwoByTwoIsFourCycle) {
  const Graph g = balanced_multipartite(2, 2);
  const auto map = find_isomorphism(g, cycle_graph(4));
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(same_adjacency_under(g, cycle_graph(4), *map));
}

TEST(Multipartite, BlockSizeOneIsComplete) {
  for (std::size_t a = 2; a <= 6; ++a) {
    const Graph g = balanced_multipartite(a, 1);
    EXPECT_EQ(g.adjacency(), complete_graph(a).adjacency());
    EXPECT_EQ(g.family().kind, FamilyKind::complete);
  }
}

TEST(Multipartite, K33HasSixVerticesOfDegreeThree) {
  const Graph g = balanced_multipartite(2, 3);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.degree(), 3u);
  // Every edge crosses the blocks {0,1,2} and {3,4,5}, and all 9 crossings are present.
  std::size_t crossings = 0;
  for (const auto& [u, v] : g.edges()) {
    EXPECT_NE(u / 3, v / 3);
    ++crossings;
  }
  EXPECT_EQ(crossings, 9u);
}

TEST(Multipartite, AdjacencyIsKroneckerOfBlocks) {
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 4}, {4, 3}}) {
    Eigen::MatrixXcd ka = Eigen::MatrixXcd::Ones(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a));
    ka.diagonal().setZero();
    const Eigen::MatrixXcd jb = Eigen::MatrixXcd::Ones(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b));
    const ComplexMatrix k = kronecker(ComplexMatrix(ka), ComplexMatrix(jb));
    const Graph g = balanced_multipartite(a, b);
    EXPECT_EQ(g.degree(), (a - 1) * b);
    EXPECT_LT((k.entries() - g.adjacency_real().cast<Complex>()).cwiseAbs().maxCoeff(), 1e-300);
  }
}

TEST(Multipartite, RejectsSingleBlock) {
  EXPECT_EQ(kind_of([] { balanced_multipartite(1, 4); }), ErrorKind::degenerate_graph);
  EXPECT_EQ(kind_of([] { balanced_multipartite(0, 4); }), ErrorKind::degenerate_graph);
}

TEST(Cycle, C3IsK3) { EXPECT_EQ(cycle_graph(3).adjacency(), complete_graph(3).adjacency()); }

TEST(Cycle, C4IsK22UnderExplicitPermutation) {
  // Cycle 0-1-2-3-0 has bipartition {0,2} | {1,3}; send it to blocks {0,1} | {2,3}.
  const std::vector<std::size_t> map = {0, 2, 1, 3};
  EXPECT_TRUE(same_adjacency_under(cycle_graph(4), balanced_multipartite(2, 2), map));
}

TEST(Cycle, PentagonFirstRow) {
  const Graph g = cycle_graph(5);
  const std::vector<int> row = {0, 1, 0, 0, 1};
  for (Eigen::Index k = 0; k < 5; ++k) EXPECT_EQ(g.adjacency()(0, k), row[static_cast<std::size_t>(k)]);
}

TEST(Cycle, RejectsSmall) { EXPECT_EQ(kind_of([] { cycle_graph(2); }), ErrorKind::invalid_parameter); }

TEST(Cayley, S2IsK2) { EXPECT_EQ(cayley_symmetric(2).adjacency(), complete_graph(2).adjacency()); }

TEST(Cayley, S3IsK33) {
  const Graph g = cayley_symmetric(3);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.degree(), 3u);
  const auto map = find_isomorphism(g, balanced_multipartite(2, 3));
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(same_adjacency_under(g, balanced_multipartite(2, 3), *map));
}

TEST(Cayley, S4Shape) {
  const Graph g = cayley_symmetric(4);
  EXPECT_EQ(g.size(), 24u);
  EXPECT_EQ(g.degree(), 6u);
  EXPECT_TRUE(g.is_connected());
}

TEST(Cayley, ParityIsAProperTwoColoring) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const Graph g = cayley_symmetric(n);
    const auto perms = permutations_lex(n);
    for (const auto& [u, v] : g.edges()) {
      EXPECT_NE(permutation_sign(perms[u]), permutation_sign(perms[v])) << "n = " << n;
    }
  }
}

TEST(Cayley, EdgesAreLeftTranspositions) {
  // Brute force: pi ~ sigma iff sigma pi^{-1} is a transposition.
  const std::size_t n = 4;
  const Graph g = cayley_symmetric(n);
  const auto perms = permutations_lex(n);
  for (std::size_t u = 0; u < perms.size(); ++u) {
    std::vector<std::size_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i) inverse[perms[u][i]] = i;
    for (std::size_t v = 0; v < perms.size(); ++v) {
      std::size_t moved = 0;
      for (std::size_t i = 0; i < n; ++i) moved += perms[v][inverse[i]] != i ? 1 : 0;
      EXPECT_EQ(g.has_edge(u, v), moved == 2);
    }
  }
}

TEST(Cayley, SizeLimit) {
  EXPECT_EQ(kind_of([] { cayley_symmetric(6); }), ErrorKind::size_limit);
  EXPECT_NO_THROW(cayley_symmetric(5));
}

TEST(Hypercube, SmallCases) {
  EXPECT_EQ(hypercube_graph(1).adjacency(), complete_graph(2).adjacency());
  EXPECT_TRUE(find_isomorphism(hypercube_graph(2), cycle_graph(4)).has_value());
  const Graph q3 = hypercube_graph(3);
  EXPECT_EQ(q3.size(), 8u);
  EXPECT_EQ(q3.edges().size(), 3u * 4u);
}

TEST(Hypercube, SizeLimit) {
  EXPECT_EQ(kind_of([] { hypercube_graph(13); }), ErrorKind::size_limit);
  EXPECT_EQ(kind_of([] { hypercube_graph(0); }), ErrorKind::invalid_parameter);
}

TEST(GraphInvariants, RegularSymmetricConnected) {
  for (const Graph& g : testing::built_in_graphs(24)) {
    const Eigen::MatrixXd a = g.adjacency_real();
    EXPECT_EQ(a, a.transpose());
    EXPECT_EQ(a.diagonal().sum(), 0.0);
    for (Eigen::Index r = 0; r < a.rows(); ++r) EXPECT_EQ(a.row(r).sum(), static_cast<double>(g.degree()));
    EXPECT_TRUE(g.is_connected()) << family_label(g.family());
  }
}

TEST(GraphConstructor, RejectsBadAdjacency) {
  AdjacencyMatrix loop = AdjacencyMatrix::Zero(2, 2);
  loop(0, 0) = 1;
  EXPECT_THROW(Graph(loop, Family{}), Error);
  AdjacencyMatrix directed = AdjacencyMatrix::Zero(3, 3);
  directed(0, 1) = 1;
  EXPECT_THROW(Graph(directed, Family{}), Error);
  AdjacencyMatrix path = AdjacencyMatrix::Zero(3, 3);
  path(0, 1) = path(1, 0) = path(1, 2) = path(2, 1) = 1;
  EXPECT_EQ(kind_of([&] { Graph(path, Family{}); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { Graph(AdjacencyMatrix::Zero(4, 4), Family{}); }), ErrorKind::degenerate_graph);
}

TEST(HamiltonianForms, K2AdjacencyOverDegreeIsX) {
  const Hamiltonian h = hamiltonian(complete_graph(2));
  EXPECT_TRUE(h.matrix.is_hermitian());
  EXPECT_EQ(h.matrix(0, 1), Complex(1.0, 0.0));
  EXPECT_EQ(h.matrix(0, 0), Complex(0.0, 0.0));
}

TEST(HamiltonianForms, K3Spectrum) {
  const RealVector e = hermitian_eigendecomposition(hamiltonian(complete_graph(3)).matrix).eigenvalues;
  EXPECT_NEAR(e(0), -0.5, 1e-14);
  EXPECT_NEAR(e(1), -0.5, 1e-14);
  EXPECT_NEAR(e(2), 1.0, 1e-14);
}

TEST(HamiltonianForms, C4LaplacianSpectrum) {
  const Hamiltonian h = hamiltonian(cycle_graph(4), Normalization::laplacian);
  const RealVector e = hermitian_eigendecomposition(h.matrix).eigenvalues;
  const std::vector<double> expected = {-4.0, -2.0, -2.0, 0.0};
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(e(static_cast<Eigen::Index>(j)), expected[j], 1e-13);
  EXPECT_EQ(h.matrix(0, 0), Complex(-2.0, 0.0));
}

TEST(HamiltonianForms, RowSumsOfNormalizedAdjacency) {
  for (const Graph& g : testing::built_in_graphs(16)) {
    const Eigen::MatrixXcd h = hamiltonian(g).matrix.entries();
    for (Eigen::Index r = 0; r < h.rows(); ++r) EXPECT_NEAR(h.row(r).sum().real(), 1.0, 1e-14);
  }
}

TEST(Isomorphism, DistinguishesNonIsomorphicRegularGraphs) {
  // Both 2-regular on 6 vertices: C_6 versus two disjoint triangles.
  AdjacencyMatrix triangles = AdjacencyMatrix::Zero(6, 6);
  for (int base : {0, 3}) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) triangles(base + i, base + j) = 1;
      }
    }
  }
  EXPECT_FALSE(find_isomorphism(cycle_graph(6), Graph(triangles, Family{})).has_value());
  EXPECT_FALSE(find_isomorphism(cycle_graph(6), complete_graph(6)).has_value());
}

TEST(EdgeList, FormatOfTriangle) {
  EXPECT_EQ(to_edge_list(complete_graph(3)), "3 2 complete-3\n0 1\n0 2\n1 2\n");
}

TEST(EdgeList, RoundTripsEveryBuiltInGraph) {
  for (const Graph& g : testing::built_in_graphs(24)) {
    const Graph back = from_edge_list(to_edge_list(g));
    EXPECT_EQ(back.adjacency(), g.adjacency());
    EXPECT_EQ(back.family(), g.family());
    EXPECT_EQ(back.degree(), g.degree());
  }
}

TEST(EdgeList, FamilyTokens) {
  EXPECT_EQ(parse_family_token("cayley-sym-4"), (Family{FamilyKind::cayley_symmetric, {4}}));
  EXPECT_EQ(parse_family_token("multipartite-2-3"), (Family{FamilyKind::multipartite, {2, 3}}));
  EXPECT_EQ(parse_family_token("custom"), (Family{FamilyKind::custom, {}}));
  EXPECT_THROW(parse_family_token("wheel-5"), Error);
  EXPECT_THROW(parse_family_token("cycle-x"), Error);
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_EQ(kind_of([] { from_edge_list("3 2\n"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { from_edge_list("3 2 custom\n0 1\n0 3\n"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { from_edge_list("3 1 custom\n0 1\n0 2\n1 2\n"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { from_edge_list("3 2 custom\n0 1\n0 2\n1 2\nfoo\n"); }), ErrorKind::parse_error);
}

}  // namespace
}  // namespace qwalk
