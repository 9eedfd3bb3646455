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

#include "itclust/pipeline.hpp"

#include "itclust/errors.hpp"
#include "itclust/itdoc.hpp"

namespace itclust {

PotentialField PotentialForPoints(std::span<const Point2> points,
                                  LocalSizeKind sdef, TransformKind transform,
                                  bool complete_graph_fallback,
                                  std::optional<Triangulation>* tri_out) {
  PotentialField field;
  field.kind = sdef;
  field.transform = transform;
  try {
    Triangulation tri = Delaunay(points);
    field.s = LocalSize(tri, sdef);
    if (tri_out) *tri_out = std::move(tri);
  } catch (const DegenerateInput&) {
    if (!complete_graph_fallback || !IsDistanceStatistic(sdef)) throw;
    field.s = LocalSizeCompleteGraph(points, sdef);
  }
  field.p = Transform(field.s, transform);
  return field;
}

CutResult RunCutter(const InTree& tree, const CutterConfig& cutter,
                    const LabelSet& labels) {
  switch (cutter.kind) {
    case CutterKind::kSemiSupervised:
      return SemiSupervisedCut(tree, labels);
    case CutterKind::kDgAuto:
      return DecisionGraphAutoCut(tree, cutter.k);
    case CutterKind::kDgManual:
      return DecisionGraphManualCut(tree, cutter.nodes);
  }
  throw CutterError("unknown cutter");
}

PipelineResult RunPipeline(const PipelineConfig& config) {
  PipelineResult result;
  result.data = LoadPoints(config.points, config.load);
  result.potential =
      PotentialForPoints(result.data.points, config.sdef, config.transform,
                         config.complete_graph_fallback, &result.tri);
  result.tree = BuildInTree(result.data.points, result.potential.p);

  if (config.cutter.kind == CutterKind::kSemiSupervised) {
    if (config.labels) {
      result.labels = LoadLabels(*config.labels);
    } else if (config.labels_per_cluster > 0) {
      if (!result.data.ground_truth) {
        throw InputError("sampling labels needs a class column in " +
                         config.points.string());
      }
      result.labels = SampleLabels(*result.data.ground_truth,
                                   config.labels_per_cluster, config.seed);
    }
  }
  result.cut = RunCutter(result.tree, config.cutter, result.labels);
  if (result.data.ground_truth) {
    result.report = ComputeMetrics(result.cut.assignment, *result.data.ground_truth);
  }
  return result;
}

void WriteArtifacts(const PipelineConfig& config, const PipelineResult& result) {
  std::filesystem::create_directories(config.out_dir);
  const auto& dir = config.out_dir;
  WriteFile(dir / "tree.json",
            InTreeToJson(ApplyCuts(result.tree, result.cut.cut_nodes)));
  WriteFile(dir / "clusters.csv", FormatClusters(result.cut.assignment));
  if (result.report) WriteFile(dir / "report.json", MetricReportToJson(*result.report));
  for (SvgView view : config.svg) {
    std::string svg;
    switch (view) {
      case SvgView::kDelaunayPotential:
        if (!result.tri) throw DegenerateInput("no triangulation to draw");
        svg = RenderDelaunaySvg(*result.tri, result.potential.p);
        break;
      case SvgView::kItPotential:
        svg = RenderInTreeSvg(result.data.points, result.tree);
        break;
      case SvgView::kClusters:
        svg = RenderClustersSvg(result.data.points, result.cut.assignment,
                                result.labels);
        break;
      case SvgView::kDecisionGraph:
        svg = RenderDecisionGraphSvg(BuildDecisionGraph(result.tree),
                                     result.cut.cut_nodes);
        break;
    }
    WriteFile(dir / (std::string(ToString(view)) + ".svg"), svg);
  }
}

}  // namespace itclust
