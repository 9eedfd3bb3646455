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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "itclust/errors.hpp"

namespace itclust {
namespace {

bool Precedes(std::span<const double> p, std::size_t a, std::size_t b) {
  return p[a] < p[b] || (p[a] == p[b] && a < b);
}

InTree Empty(std::span<const double> potential) {
  InTree tree;
  const std::size_t n = potential.size();
  tree.parent.resize(n);
  std::iota(tree.parent.begin(), tree.parent.end(), std::size_t{0});
  tree.edge_length.assign(n, 0.0);
  tree.potential.assign(potential.begin(), potential.end());
  tree.cut_flags.assign(n, false);
  return tree;
}

}  // namespace

std::vector<std::size_t> InTree::roots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (is_root(i)) out.push_back(i);
  }
  return out;
}

bool InTree::has_cuts() const {
  return std::find(cut_flags.begin(), cut_flags.end(), true) != cut_flags.end();
}

InTree BuildInTree(std::span<const Point2> points,
                   std::span<const double> potential) {
  if (points.size() != potential.size()) {
    throw LengthMismatch("points and potential differ in length");
  }
  InTree tree = Empty(potential);
  const std::size_t n = points.size();

  // Visiting nodes in (P, index) order makes every candidate set a prefix.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return Precedes(potential, a, b);
  });

  for (std::size_t r = 1; r < n; ++r) {
    const std::size_t i = order[r];
    std::size_t best = order[0];
    double best_d2 = SquaredDistance(points[i], points[best]);
    for (std::size_t c = 1; c < r; ++c) {
      const std::size_t j = order[c];
      const double d2 = SquaredDistance(points[i], points[j]);
      if (d2 < best_d2 || (d2 == best_d2 && j < best)) {
        best = j;
        best_d2 = d2;
      }
    }
    tree.parent[i] = best;
    tree.edge_length[i] = std::sqrt(best_d2);
  }
  return tree;
}

InTree DelaunayDescent(const Triangulation& tri,
                       std::span<const double> potential) {
  if (tri.points.size() != potential.size()) {
    throw LengthMismatch("triangulation and potential differ in length");
  }
  InTree tree = Empty(potential);
  const std::size_t n = tri.points.size();

  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) {
    members[tri.representative[i]].push_back(i);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t site = tri.representative[i];
    std::size_t best = i;
    auto consider = [&](std::size_t j) {
      if (j != i && Precedes(potential, j, best)) best = j;
    };
    for (std::size_t j : members[site]) consider(j);
    for (std::size_t nb : tri.neighbor_sets[site]) {
      for (std::size_t j : members[nb]) consider(j);
    }
    tree.parent[i] = best;
    tree.edge_length[i] = Distance(tri.points[i], tri.points[best]);
  }
  return tree;
}

ClusterAssignment AssignClusters(const InTree& tree) {
  const std::size_t n = tree.size();
  constexpr std::size_t kUnknown = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> root_of(n, kUnknown);
  std::vector<std::size_t> path;

  ClusterAssignment out;
  out.cluster_id.assign(n, 0);
  std::vector<std::size_t> id_of_root(n, kUnknown);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = i;
    path.clear();
    while (root_of[v] == kUnknown && !tree.is_root(v)) {
      path.push_back(v);
      if (path.size() > n) throw SchemaError("in-tree contains a cycle");
      v = tree.parent[v];
    }
    const std::size_t root = root_of[v] == kUnknown ? v : root_of[v];
    root_of[v] = root;
    for (std::size_t u : path) root_of[u] = root;
    if (id_of_root[root] == kUnknown) {
      id_of_root[root] = out.roots.size();
      out.roots.push_back(root);
    }
    out.cluster_id[i] = id_of_root[root];
  }
  out.k = out.roots.size();
  return out;
}

void ValidateInTree(const InTree& tree) {
  const std::size_t n = tree.parent.size();
  if (tree.edge_length.size() != n || tree.potential.size() != n ||
      tree.cut_flags.size() != n) {
    throw SchemaError("in-tree arrays differ in length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (tree.parent[i] >= n) {
      throw SchemaError("parent of node " + std::to_string(i) +
                        " is out of range");
    }
  }
  std::vector<char> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::size_t> path;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = i;
    path.clear();
    while (state[v] == 0 && !tree.is_root(v)) {
      state[v] = 1;
      path.push_back(v);
      v = tree.parent[v];
    }
    if (state[v] == 1) {
      throw SchemaError("parent cycle through node " + std::to_string(v));
    }
    state[v] = 2;
    for (std::size_t u : path) state[u] = 2;
  }
}

}  // namespace itclust
