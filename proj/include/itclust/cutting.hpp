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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "itclust/intree.hpp"

namespace itclust {

/// Partial labelling: node index -> label name.
using LabelSet = std::map<std::size_t, std::string>;

struct DecisionGraphEntry {
  std::size_t node = 0;
  double p = 0.0;
  double w = 0.0;

  friend bool operator==(const DecisionGraphEntry&,
                         const DecisionGraphEntry&) = default;
};

/// One entry per non-root node, sorted by node index.
using DecisionGraph = std::vector<DecisionGraphEntry>;

struct CutResult {
  /// Nodes whose outgoing edges were severed, in the order they were cut.
  std::vector<std::size_t> cut_nodes;
  ClusterAssignment assignment;
  /// Set by the semi-supervised cutter when a component still holds more
  /// than one label kind after the pass.
  bool impure_residue = false;
};

/// Throws CutterError if the tree already carries cuts.
DecisionGraph BuildDecisionGraph(const InTree& tree);

/// Pop-out score W~ * (1 - P~) per entry, both factors min-max normalised
/// over the entries (0.5 when the range is empty).
std::vector<double> PopOutScores(const DecisionGraph& graph);

/// The k - 1 highest-scoring decision graph nodes (ties to the lower index).
std::vector<std::size_t> TopPopOutNodes(const InTree& tree, std::size_t k);

/// Severs the k - 1 highest-scoring edges. Throws KTooLarge for k > n.
CutResult DecisionGraphAutoCut(const InTree& tree, std::size_t k);

/// Severs exactly the listed edges. Throws InvalidCutNode for roots,
/// out-of-range or repeated indices.
CutResult DecisionGraphManualCut(const InTree& tree,
                                 std::span<const std::size_t> cut_nodes);

/// Semi-supervised divisive cutting. Edges are visited once in decreasing
/// length (ties to the lower start node). An edge inside a component holding
/// two or more label kinds is cut when both resulting parts keep at least one
/// labelled node and the larger per-part label count drops below the
/// component's. Throws InsufficientLabels for fewer than two labelled
/// points; a single label kind yields no cuts.
CutResult SemiSupervisedCut(const InTree& tree, const LabelSet& labels);

/// Copy of `tree` with the cut flags of `cut_nodes` set.
InTree ApplyCuts(const InTree& tree, std::span<const std::size_t> cut_nodes);

}  // namespace itclust
