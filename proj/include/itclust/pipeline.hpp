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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "itclust/cutting.hpp"
#include "itclust/evalio.hpp"
#include "itclust/geometry2d.hpp"
#include "itclust/intree.hpp"
#include "itclust/potential.hpp"
#include "itclust/svg.hpp"

namespace itclust {

enum class CutterKind { kSemiSupervised, kDgAuto, kDgManual };

struct CutterConfig {
  CutterKind kind = CutterKind::kDgAuto;
  std::size_t k = 1;
  std::vector<std::size_t> nodes;
};

struct PipelineConfig {
  std::filesystem::path points;
  std::optional<std::filesystem::path> labels;
  /// When positive and no label file is given, labels are sampled from the
  /// ground truth with this many per class.
  std::size_t labels_per_cluster = 0;
  LocalSizeKind sdef = LocalSizeKind::kNeighborSimplexVolume;
  TransformKind transform = TransformKind::kLogRatio;
  CutterConfig cutter;
  std::filesystem::path out_dir = ".";
  std::vector<SvgView> svg;
  std::uint64_t seed = 0;
  LoadOptions load;
  /// Distance statistics over the complete graph when triangulation fails.
  bool complete_graph_fallback = false;
};

struct PipelineResult {
  Dataset data;
  std::optional<Triangulation> tri;
  PotentialField potential;
  InTree tree;  // fresh, without cuts
  LabelSet labels;
  CutResult cut;
  std::optional<MetricReport> report;
};

/// Steps 1-4: local size and potential, descent tree, cutting, roots.
PipelineResult RunPipeline(const PipelineConfig& config);

PotentialField PotentialForPoints(std::span<const Point2> points,
                                  LocalSizeKind sdef, TransformKind transform,
                                  bool complete_graph_fallback,
                                  std::optional<Triangulation>* tri_out = nullptr);

CutResult RunCutter(const InTree& tree, const CutterConfig& cutter,
                    const LabelSet& labels);

/// Writes tree.json, clusters.csv, report.json (with ground truth) and one
/// <view>.svg per requested view into config.out_dir.
void WriteArtifacts(const PipelineConfig& config, const PipelineResult& result);

}  // namespace itclust
