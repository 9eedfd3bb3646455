// Copyright 2026 The itclust Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "itclust/intree.hpp"

#include <gtest/gtest.h>

#include <random>

#include "itclust/errors.hpp"
#include "test_support.hpp"

namespace itclust {
namespace {

// Direct reading of the descent rule: scan every j, keep those with lower
// potential or equal potential and lower index, take the nearest, ties to
// the lower index.
std::vector<std::size_t> OracleParents(const std::vector<Point2>& pts,
                                       const std::vector<double>& p) {
  std::vector<std::size_t> parent(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    parent[i] = i;
    double best = 0.0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const bool candidate = p[j] < p[i] || (p[j] == p[i] && j < i);
      if (!candidate) continue;
      const double d = SquaredDistance(pts[i], pts[j]);
      if (parent[i] == i || d < best) {
        parent[i] = j;
        best = d;
      }
    }
  }
  return parent;
}

TEST(BuildInTree, HandTrace) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}};
  const InTree tree = BuildInTree(pts, std::vector<double>{3, 1, 2});
  EXPECT_EQ(tree.parent, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(tree.edge_length, (std::vector<double>{1, 0, 1}));
  EXPECT_EQ(tree.roots(), (std::vector<std::size_t>{1}));
}

TEST(BuildInTree, DuplicatesAttachByIndex) {
  const InTree tree = BuildInTree(std::vector<Point2>{{0, 0}, {0, 0}},
                                  std::vector<double>{1, 1});
  EXPECT_EQ(tree.parent, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(tree.edge_length[1], 0.0);
}

TEST(BuildInTree, EquidistantTieGoesToLowerIndex) {
  const InTree tree = BuildInTree(std::vector<Point2>{{0, 0}, {1, 0}, {-1, 0}},
                                  std::vector<double>{5, 1, 1});
  EXPECT_EQ(tree.parent[0], 1u);
  EXPECT_EQ(tree.parent[2], 1u);
}

TEST(BuildInTree, CandidatesAreGlobalNotNeighbours) {
  // Node 2 is nearest to node 1, but only node 0 has lower potential.
  const InTree tree = BuildInTree(std::vector<Point2>{{0, 0}, {10, 0}, {11, 0}},
                                  std::vector<double>{0, 5, 1});
  EXPECT_EQ(tree.parent, (std::vector<std::size_t>{0, 2, 0}));
  EXPECT_EQ(tree.edge_length[2], 11.0);
}

TEST(BuildInTree, MatchesOracleWithManyTies) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = testing::GridPoints(1 + rng() % 40, trial, 5);
    std::vector<double> p(pts.size());
    for (auto& v : p) v = static_cast<double>(rng() % 4);
    EXPECT_EQ(BuildInTree(pts, p).parent, OracleParents(pts, p)) << trial;
  }
}

TEST(BuildInTree, SingleRootLaw) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const auto pts = trial % 2 ? testing::GridPoints(n, trial, 3)
                               : testing::RandomPoints(n, trial);
    std::vector<double> p(n);
    for (auto& v : p) v = static_cast<double>(rng() % 7);
    const InTree tree = BuildInTree(pts, p);
    const auto roots = tree.roots();
    ASSERT_EQ(roots.size(), 1u);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_TRUE(p[roots[0]] < p[i] || (p[roots[0]] == p[i] && roots[0] <= i));
      if (tree.parent[i] != i) {
        const std::size_t j = tree.parent[i];
        ASSERT_TRUE(p[j] < p[i] || (p[j] == p[i] && j < i));
      }
    }
    ValidateInTree(tree);
  }
}

TEST(BuildInTree, LengthMismatch) {
  EXPECT_THROW(BuildInTree(std::vector<Point2>{{0, 0}}, std::vector<double>{}),
               LengthMismatch);
}

TEST(DelaunayDescent, CompleteTriangle) {
  const Triangulation tri = Delaunay(std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}});
  const InTree tree = DelaunayDescent(tri, std::vector<double>{1, 2, 3});
  EXPECT_EQ(tree.parent, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(DelaunayDescent, SeparatedBasinKeepsItsOwnRoot) {
  // Two squares joined through a midpoint; the right square's lowest node is
  // not adjacent to the global minimum.
  const std::vector<Point2> pts{{0, 0},  {1, 0},  {0, 1},  {1, 1}, {10, 0},
                                {11, 0}, {10, 1}, {11, 1}, {5, 0.5}};
  const std::vector<double> p{0, 1, 1, 1, 0.5, 1, 1, 1, 5};
  const Triangulation tri = BruteForceDelaunay(pts);
  const auto& n4 = tri.neighbor_sets[4];
  ASSERT_FALSE(std::binary_search(n4.begin(), n4.end(), 0u));
  EXPECT_GE(DelaunayDescent(tri, p).roots().size(), 2u);
  EXPECT_EQ(BuildInTree(pts, p).roots().size(), 1u);
}

TEST(DelaunayDescent, RootsAreLocalMinima) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pts = testing::RandomPoints(100, seed);
    std::mt19937_64 rng(seed);
    std::vector<double> p(pts.size());
    for (auto& v : p) v = static_cast<double>(rng() % 10);
    const Triangulation tri = Delaunay(pts);
    const InTree tree = DelaunayDescent(tri, p);
    const auto roots = tree.roots();
    ASSERT_GE(roots.size(), 1u);
    for (std::size_t r : roots) {
      for (std::size_t j : tri.neighbor_sets[r]) {
        EXPECT_TRUE(p[r] < p[j] || (p[r] == p[j] && r < j));
      }
    }
    ValidateInTree(tree);
  }
}

TEST(AssignClusters, Examples) {
  InTree tree;
  tree.parent = {1, 1, 1};
  tree.edge_length = {1, 0, 1};
  tree.potential = {3, 1, 2};
  tree.cut_flags = {false, false, false};
  ClusterAssignment a = AssignClusters(tree);
  EXPECT_EQ(a.k, 1u);
  EXPECT_EQ(a.cluster_id, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(a.roots, (std::vector<std::size_t>{1}));

  tree.cut_flags[2] = true;
  a = AssignClusters(tree);
  EXPECT_EQ(a.k, 2u);
  EXPECT_EQ(a.cluster_id, (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(a.roots, (std::vector<std::size_t>{1, 2}));
}

TEST(AssignClusters, ChainWithCut) {
  InTree tree;
  tree.parent = {0, 0, 1, 2, 3, 4};
  tree.edge_length = {0, 1, 1, 8, 1, 1};
  tree.potential = {0, 1, 2, 3, 4, 5};
  tree.cut_flags.assign(6, false);
  tree.cut_flags[3] = true;
  const ClusterAssignment a = AssignClusters(tree);
  EXPECT_EQ(a.cluster_id, (std::vector<std::size_t>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(a.roots, (std::vector<std::size_t>{0, 3}));
}

TEST(AssignClusters, LongChainDoesNotRecurse) {
  const std::size_t n = 200000;
  InTree tree;
  tree.parent.resize(n);
  for (std::size_t i = 0; i < n; ++i) tree.parent[i] = i == 0 ? 0 : i - 1;
  tree.edge_length.assign(n, 1.0);
  tree.potential.assign(n, 0.0);
  tree.cut_flags.assign(n, false);
  EXPECT_EQ(AssignClusters(tree).k, 1u);
}

TEST(ValidateInTree, RejectsCyclesAndBadParents) {
  InTree tree;
  tree.parent = {1, 2, 0};
  tree.edge_length = {1, 1, 1};
  tree.potential = {0, 0, 0};
  tree.cut_flags = {false, false, false};
  EXPECT_THROW(ValidateInTree(tree), SchemaError);
  tree.cut_flags[2] = true;  // the cut breaks the cycle
  EXPECT_NO_THROW(ValidateInTree(tree));
  tree.parent[0] = 7;
  EXPECT_THROW(ValidateInTree(tree), SchemaError);
}

}  // namespace
}  // namespace itclust
