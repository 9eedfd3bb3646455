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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "itclust/cutting.hpp"
#include "itclust/geometry2d.hpp"
#include "itclust/intree.hpp"

namespace itclust {

enum class SvgView { kDelaunayPotential, kItPotential, kClusters, kDecisionGraph };

std::optional<SvgView> ParseSvgView(std::string_view name);
std::string_view ToString(SvgView view);

/// Points coloured by potential over the Delaunay edges.
std::string RenderDelaunaySvg(const Triangulation& tri,
                              std::span<const double> potential);

/// Points coloured by potential with one segment per uncut in-tree edge.
std::string RenderInTreeSvg(std::span<const Point2> points, const InTree& tree);

/// Points coloured by cluster; labelled nodes drawn as triangles.
std::string RenderClustersSvg(std::span<const Point2> points,
                              const ClusterAssignment& assignment,
                              const LabelSet& labels = {});

/// Potential (x) against edge length (y); `selected` marks pop-outs.
std::string RenderDecisionGraphSvg(const DecisionGraph& graph,
                                   std::span<const std::size_t> selected = {});

/// Fixed 11-stop sequential palette (viridis samples), low to high.
inline constexpr std::string_view kSequentialPalette[] = {
    "#440154", "#482475", "#414487", "#355f8d", "#2a788e", "#21918c",
    "#22a884", "#44bf70", "#7ad151", "#bddf26", "#fde725"};

/// Fixed 20-entry categorical palette (tab20 order), indexed by id mod 20.
inline constexpr std::string_view kCategoricalPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5",
    "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d", "#9edae5"};

}  // namespace itclust
