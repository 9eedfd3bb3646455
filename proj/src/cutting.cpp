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

#include "itclust/cutting.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "itclust/errors.hpp"

namespace itclust {
namespace {

void RequireFresh(const InTree& tree) {
  if (tree.has_cuts()) throw CutterError("in-tree already carries cuts");
}

std::vector<double> Normalize(std::span<const double> v) {
  std::vector<double> out(v.size(), 0.5);
  if (v.empty()) return out;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - *lo) / range;
  return out;
}

// Label counts of the nodes reachable from `top` through uncut child edges.
std::unordered_map<int, std::size_t> CountLabels(
    std::size_t top, const std::vector<std::vector<std::size_t>>& children,
    const std::vector<bool>& cut, const std::vector<int>& label_of) {
  std::unordered_map<int, std::size_t> counts;
  std::vector<std::size_t> stack{top};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (label_of[v] >= 0) ++counts[label_of[v]];
    for (std::size_t c : children[v]) {
      if (!cut[c]) stack.push_back(c);
    }
  }
  return counts;
}

}  // namespace

InTree ApplyCuts(const InTree& tree, std::span<const std::size_t> cut_nodes) {
  InTree out = tree;
  for (std::size_t c : cut_nodes) out.cut_flags.at(c) = true;
  return out;
}

DecisionGraph BuildDecisionGraph(const InTree& tree) {
  RequireFresh(tree);
  DecisionGraph graph;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (tree.is_root(i)) continue;
    graph.push_back({i, tree.potential[i], tree.edge_length[i]});
  }
  return graph;
}

std::vector<double> PopOutScores(const DecisionGraph& graph) {
  std::vector<double> p, w;
  p.reserve(graph.size());
  w.reserve(graph.size());
  for (const auto& e : graph) {
    p.push_back(e.p);
    w.push_back(e.w);
  }
  const std::vector<double> pn = Normalize(p);
  const std::vector<double> wn = Normalize(w);
  std::vector<double> gamma(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    gamma[i] = wn[i] * (1.0 - pn[i]);
  }
  return gamma;
}

std::vector<std::size_t> TopPopOutNodes(const InTree& tree, std::size_t k) {
  if (k == 0) throw CutterError("k must be at least 1");
  if (k > tree.size()) {
    throw KTooLarge("k = " + std::to_string(k) + " exceeds n = " +
                    std::to_string(tree.size()));
  }
  const DecisionGraph graph = BuildDecisionGraph(tree);
  if (k - 1 > graph.size()) {
    throw KTooLarge("k = " + std::to_string(k) + " needs more than the " +
                    std::to_string(graph.size()) + " available edges");
  }
  const std::vector<double> gamma = PopOutScores(graph);
  std::vector<std::size_t> order(graph.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gamma[a] > gamma[b];
  });
  std::vector<std::size_t> nodes;
  for (std::size_t r = 0; r + 1 < k; ++r) nodes.push_back(graph[order[r]].node);
  return nodes;
}

CutResult DecisionGraphAutoCut(const InTree& tree, std::size_t k) {
  const std::vector<std::size_t> nodes = TopPopOutNodes(tree, k);
  return DecisionGraphManualCut(tree, nodes);
}

CutResult DecisionGraphManualCut(const InTree& tree,
                                 std::span<const std::size_t> cut_nodes) {
  RequireFresh(tree);
  std::set<std::size_t> seen;
  for (std::size_t c : cut_nodes) {
    if (c >= tree.size()) {
      throw InvalidCutNode(c, "cut node " + std::to_string(c) +
                                  " is out of range");
    }
    if (tree.is_root(c)) {
      throw InvalidCutNode(c, "cut node " + std::to_string(c) + " is a root");
    }
    if (!seen.insert(c).second) {
      throw InvalidCutNode(c, "cut node " + std::to_string(c) +
                                  " is listed twice");
    }
  }
  CutResult result;
  result.cut_nodes.assign(cut_nodes.begin(), cut_nodes.end());
  result.assignment = AssignClusters(ApplyCuts(tree, cut_nodes));
  return result;
}

CutResult SemiSupervisedCut(const InTree& tree, const LabelSet& labels) {
  RequireFresh(tree);
  const std::size_t n = tree.size();

  std::map<std::string, int> label_ids;
  std::vector<int> label_of(n, -1);
  for (const auto& [node, name] : labels) {
    if (node >= n) {
      throw InputError("label index " + std::to_string(node) +
                       " is out of range");
    }
    const auto [it, inserted] =
        label_ids.emplace(name, static_cast<int>(label_ids.size()));
    label_of[node] = it->second;
  }
  if (labels.size() < 2) {
    throw InsufficientLabels("need at least 2 labelled points, got " +
                             std::to_string(labels.size()));
  }
  if (label_ids.size() < 2) {
    CutResult result;
    result.assignment = AssignClusters(tree);
    return result;
  }

  std::vector<std::vector<std::size_t>> children(n);
  std::vector<std::size_t> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (tree.is_root(i)) continue;
    children[tree.parent[i]].push_back(i);
    edges.push_back(i);
  }
  std::stable_sort(edges.begin(), edges.end(), [&](std::size_t a, std::size_t b) {
    return tree.edge_length[a] > tree.edge_length[b];
  });

  std::vector<bool> cut(n, false);
  auto root_of = [&](std::size_t v) {
    while (!(tree.parent[v] == v || cut[v])) v = tree.parent[v];
    return v;
  };

  CutResult result;
  for (std::size_t u : edges) {
    const auto whole = CountLabels(root_of(u), children, cut, label_of);
    if (whole.size() < 2) continue;
    const auto below = CountLabels(u, children, cut, label_of);
    std::size_t labelled_below = 0;
    for (const auto& [label, count] : below) labelled_below += count;
    std::size_t labelled_whole = 0;
    std::size_t kinds_above = 0;
    for (const auto& [label, count] : whole) {
      labelled_whole += count;
      const auto it = below.find(label);
      if (count > (it == below.end() ? 0 : it->second)) ++kinds_above;
    }
    const std::size_t labelled_above = labelled_whole - labelled_below;
    if (labelled_below == 0 || labelled_above == 0) continue;
    if (std::max(below.size(), kinds_above) >= whole.size()) continue;
    cut[u] = true;
    result.cut_nodes.push_back(u);
  }

  const InTree final_tree = ApplyCuts(tree, result.cut_nodes);
  result.assignment = AssignClusters(final_tree);
  for (std::size_t root : result.assignment.roots) {
    if (CountLabels(root, children, cut, label_of).size() > 1) {
      result.impure_residue = true;
    }
  }
  return result;
}

}  // namespace itclust
