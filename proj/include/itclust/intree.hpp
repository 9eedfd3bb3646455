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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "itclust/geometry2d.hpp"

namespace itclust {

/// Directed forest produced by nearest neighbour descent. Every edge runs
/// from a node to a node that precedes it in (potential, index) order.
struct InTree {
  std::vector<std::size_t> parent;
  std::vector<double> edge_length;
  std::vector<double> potential;
  /// A set flag severs the node's outgoing edge, making it a root.
  std::vector<bool> cut_flags;

  std::size_t size() const { return parent.size(); }
  bool is_root(std::size_t i) const { return parent[i] == i || cut_flags[i]; }
  std::vector<std::size_t> roots() const;
  bool has_cuts() const;
};

struct ClusterAssignment {
  std::vector<std::size_t> cluster_id;
  std::size_t k = 0;
  /// roots[c] is the exemplar of cluster c.
  std::vector<std::size_t> roots;
};

/// Each node points to the nearest node (Euclidean, ties to the smaller
/// index) among all nodes with lower potential, or equal potential and a
/// smaller index. The candidate set is global, not limited to Delaunay
/// neighbours. Naive O(n^2).
InTree BuildInTree(std::span<const Point2> points, std::span<const double> potential);

/// Gradient-style baseline: each node moves to the Delaunay neighbour with
/// the smallest (potential, index) among neighbours preceding it, and is a
/// root when it is a local minimum of the Delaunay graph. Duplicates of a
/// site are adjacent to each other and to the site's neighbours.
InTree DelaunayDescent(const Triangulation& tri, std::span<const double> potential);

/// Root of every node by path following. Cluster ids are dense and ordered
/// by the first node index at which each root is reached.
ClusterAssignment AssignClusters(const InTree& tree);

/// Throws SchemaError unless the arrays are consistent and every path
/// reaches a root within n steps.
void ValidateInTree(const InTree& tree);

}  // namespace itclust
