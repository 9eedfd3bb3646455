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

// Command line front end: each clustering step is its own subcommand, and
// `run` (alias `cluster`) composes them.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itclust/dgserver.hpp"
#include "itclust/errors.hpp"
#include "itclust/evalio.hpp"
#include "itclust/itdoc.hpp"
#include "itclust/pipeline.hpp"

namespace {

using namespace itclust;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitCutter = 4;

const std::map<std::string, LocalSizeKind> kSdefNames{
    {"simplex", LocalSizeKind::kNeighborSimplexVolume},
    {"voronoi", LocalSizeKind::kVoronoiCellVolume},
    {"median", LocalSizeKind::kMedianNeighborDistance},
    {"mean", LocalSizeKind::kMeanNeighborDistance},
    {"max", LocalSizeKind::kMaxNeighborDistance},
    {"min", LocalSizeKind::kMinNeighborDistance},
    {"sum", LocalSizeKind::kSumNeighborDistance},
};

const std::map<std::string, TransformKind> kTransformNames{
    {"id", TransformKind::kIdentity},
    {"log-ratio", TransformKind::kLogRatio},
    {"log1p", TransformKind::kLog1p},
    {"negexp", TransformKind::kNegExp},
    {"sigmoid", TransformKind::kSigmoid},
};

struct Options {
  std::string points;
  std::string labels;
  std::size_t sample_labels = 0;
  std::string sdef = "simplex";
  std::string transform = "log-ratio";
  std::vector<std::string> cut{"dg-auto"};
  std::size_t k = 0;
  std::vector<std::size_t> nodes;
  std::string out_dir = ".";
  std::string out;
  std::vector<std::string> svg;
  std::uint64_t seed = 0;
  int port = 8765;
  bool header = false;
  bool fallback = false;
  std::string tree;
  std::string potential;
  std::string clusters;
  std::string static_dir = "web";
};

void Emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    WriteFile(out, text);
  }
}

CutterConfig ParseCutter(const Options& o) {
  CutterConfig c;
  const std::string& method = o.cut.at(0);
  if (method == "ss") {
    c.kind = CutterKind::kSemiSupervised;
  } else if (method == "dg-auto") {
    c.kind = CutterKind::kDgAuto;
    c.k = o.k;
    if (o.cut.size() > 1) c.k = std::stoul(o.cut[1]);
    if (c.k == 0) throw InputError("dg-auto needs --k");
  } else if (method == "dg-manual") {
    c.kind = CutterKind::kDgManual;
    c.nodes = o.nodes;
  } else {
    throw InputError("unknown cutter '" + method + "'");
  }
  return c;
}

std::vector<SvgView> ParseViews(const std::vector<std::string>& names) {
  std::vector<SvgView> views;
  for (const auto& n : names) {
    const auto v = ParseSvgView(n);
    if (!v) throw InputError("unknown svg view '" + n + "'");
    views.push_back(*v);
  }
  return views;
}

PipelineConfig MakeConfig(const Options& o) {
  PipelineConfig config;
  config.points = o.points;
  if (!o.labels.empty()) config.labels = o.labels;
  config.labels_per_cluster = o.sample_labels;
  config.sdef = kSdefNames.at(o.sdef);
  config.transform = kTransformNames.at(o.transform);
  config.cutter = ParseCutter(o);
  config.out_dir = o.out_dir;
  config.svg = ParseViews(o.svg);
  config.seed = o.seed;
  config.load.skip_header = o.header;
  config.complete_graph_fallback = o.fallback;
  return config;
}

void AddPoints(CLI::App* cmd, Options& o, bool required = true) {
  auto* opt = cmd->add_option("--points", o.points, "point file (x y [class])");
  if (required) opt->required();
  cmd->add_flag("--header", o.header, "skip the first non-comment row");
}

void AddPotential(CLI::App* cmd, Options& o) {
  cmd->add_option("--sdef", o.sdef, "local size definition")
      ->transform(CLI::IsMember(kSdefNames));
  cmd->add_option("--transform", o.transform, "monotone potential transform")
      ->transform(CLI::IsMember(kTransformNames));
  cmd->add_flag("--complete-graph-fallback", o.fallback,
                "use distance statistics over all pairs if triangulation fails");
}

void AddCutter(CLI::App* cmd, Options& o) {
  cmd->add_option("--cut", o.cut, "ss | dg-auto [k] | dg-manual")->expected(1, 2);
  cmd->add_option("--k", o.k, "target cluster count for dg-auto");
  cmd->add_option("--nodes", o.nodes, "cut nodes for dg-manual")->delimiter(',');
  cmd->add_option("--labels", o.labels, "label file (index,label)");
  cmd->add_option("--sample-labels", o.sample_labels,
                  "sample this many labels per true class instead of --labels");
  cmd->add_option("--seed", o.seed, "seed for label sampling");
}

PotentialField LoadOrComputePotential(const Options& o, const Dataset& data) {
  if (!o.potential.empty()) {
    PotentialField f = PotentialFromJson(ReadFile(o.potential));
    if (f.p.size() != data.points.size()) {
      throw LengthMismatch("potential document does not match the points");
    }
    return f;
  }
  return PotentialForPoints(data.points, kSdefNames.at(o.sdef),
                            kTransformNames.at(o.transform), o.fallback);
}

int Run(int argc, char** argv) {
  CLI::App app{"Nonparametric in-tree clustering on Delaunay potentials"};
  app.require_subcommand(1);
  Options o;

  auto* tri = app.add_subcommand("triangulate", "write the Delaunay triangulation");
  AddPoints(tri, o);
  tri->add_option("--out", o.out, "output file (default stdout)");

  auto* pot = app.add_subcommand("potential", "write local sizes and potentials");
  AddPoints(pot, o);
  AddPotential(pot, o);
  pot->add_option("--out", o.out, "output file (default stdout)");

  auto* tree = app.add_subcommand("tree", "build the in-tree document");
  AddPoints(tree, o);
  AddPotential(tree, o);
  tree->add_option("--potential", o.potential, "reuse a potential document");
  tree->add_option("--out", o.out, "output file (default stdout)");

  auto* cut = app.add_subcommand("cut", "cut an in-tree document into clusters");
  cut->add_option("--tree", o.tree, "in-tree document")->required();
  AddPoints(cut, o, false);
  AddCutter(cut, o);
  cut->add_option("--out", o.out, "clusters file (default stdout)");

  auto* eval = app.add_subcommand("eval", "score a clusters file");
  AddPoints(eval, o);
  eval->add_option("--clusters", o.clusters, "clusters file")->required();
  eval->add_option("--out", o.out, "report file (default stdout)");

  auto* plot = app.add_subcommand("plot", "render SVG views");
  AddPoints(plot, o);
  AddPotential(plot, o);
  AddCutter(plot, o);
  plot->add_option("--svg", o.svg, "views to render")->required();
  plot->add_option("--out-dir", o.out_dir, "output directory");

  auto* serve = app.add_subcommand("serve", "serve the decision graph UI backend");
  AddPoints(serve, o);
  AddPotential(serve, o);
  serve->add_option("--tree", o.tree, "use this in-tree document");
  serve->add_option("--port", o.port, "port on 127.0.0.1");
  serve->add_option("--static", o.static_dir, "directory served at /");

  auto* run = app.add_subcommand("run", "full pipeline")->alias("cluster");
  AddPoints(run, o);
  AddPotential(run, o);
  AddCutter(run, o);
  run->add_option("--out-dir", o.out_dir, "output directory");
  run->add_option("--svg", o.svg, "views to render");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const LoadOptions load{o.header};
  if (*tri) {
    const Dataset data = LoadPoints(o.points, load);
    Emit(o.out, TriangulationToJson(Delaunay(data.points)));
  } else if (*pot) {
    const Dataset data = LoadPoints(o.points, load);
    Emit(o.out, PotentialToJson(LoadOrComputePotential(o, data)));
  } else if (*tree) {
    const Dataset data = LoadPoints(o.points, load);
    const PotentialField f = LoadOrComputePotential(o, data);
    Emit(o.out, InTreeToJson(BuildInTree(data.points, f.p)));
  } else if (*cut) {
    const InTree it = InTreeFromJson(ReadFile(o.tree));
    const CutterConfig cutter = ParseCutter(o);
    LabelSet labels;
    if (!o.labels.empty()) {
      labels = LoadLabels(o.labels);
    } else if (o.sample_labels > 0) {
      if (o.points.empty()) throw InputError("--sample-labels needs --points");
      const Dataset data = LoadPoints(o.points, load);
      if (!data.ground_truth) throw InputError(o.points + " has no class column");
      labels = SampleLabels(*data.ground_truth, o.sample_labels, o.seed);
    }
    Emit(o.out, FormatClusters(RunCutter(it, cutter, labels).assignment));
  } else if (*eval) {
    const Dataset data = LoadPoints(o.points, load);
    if (!data.ground_truth) throw InputError(o.points + " has no class column");
    const ClusterAssignment a = ParseClusters(ReadFile(o.clusters));
    Emit(o.out, MetricReportToJson(ComputeMetrics(a, *data.ground_truth)));
  } else if (*plot) {
    PipelineConfig config = MakeConfig(o);
    const PipelineResult result = RunPipeline(config);
    WriteArtifacts(config, result);
  } else if (*serve) {
    const Dataset data = LoadPoints(o.points, load);
    InTree it = o.tree.empty()
                    ? BuildInTree(data.points, LoadOrComputePotential(o, data).p)
                    : InTreeFromJson(ReadFile(o.tree));
    DgSession session(data.points, std::move(it));
    std::cerr << "serving http://127.0.0.1:" << o.port << "/\n";
    if (!Serve(session, o.port, o.static_dir)) {
      throw InputError("cannot listen on port " + std::to_string(o.port));
    }
  } else if (*run) {
    const PipelineConfig config = MakeConfig(o);
    const PipelineResult result = RunPipeline(config);
    WriteArtifacts(config, result);
    std::cout << "k=" << result.cut.assignment.k;
    if (result.report) {
      std::cout << " purity=" << result.report->purity
                << " ari=" << result.report->ari;
    }
    std::cout << "\n";
    if (result.cut.impure_residue) {
      std::cerr << "warning: a cluster still holds more than one label kind\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const itclust::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.category()) {
      case itclust::ErrorCategory::kGeometry:
        return kExitGeometry;
      case itclust::ErrorCategory::kCutter:
        return kExitCutter;
      case itclust::ErrorCategory::kInput:
        return kExitInput;
    }
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
