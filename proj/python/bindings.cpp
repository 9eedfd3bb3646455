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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "itclust/cutting.hpp"
#include "itclust/errors.hpp"
#include "itclust/evalio.hpp"
#include "itclust/geometry2d.hpp"
#include "itclust/intree.hpp"
#include "itclust/itdoc.hpp"
#include "itclust/potential.hpp"

namespace py = pybind11;

namespace itclust {
namespace {

using PyPoints = std::vector<std::pair<double, double>>;

std::vector<Point2> ToPoints(const PyPoints& in) {
  std::vector<Point2> out;
  out.reserve(in.size());
  for (const auto& [x, y] : in) out.push_back({x, y});
  return out;
}

LocalSizeKind SizeKind(const std::string& name) {
  if (auto k = ParseLocalSizeKind(name)) return *k;
  throw InputError("unknown local size definition '" + name + "'");
}

TransformKind TransformByName(const std::string& name) {
  if (auto t = ParseTransformKind(name)) return *t;
  throw InputError("unknown transform '" + name + "'");
}

}  // namespace
}  // namespace itclust

PYBIND11_MODULE(_core, m) {
  using namespace itclust;
  m.doc() = "In-tree clustering on Delaunay-derived potentials";

  auto error = py::register_exception<Error>(m, "Error");
  auto input_error = py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", input_error.ptr());
  py::register_exception<DegenerateInput>(m, "DegenerateInput", error.ptr());
  auto cutter_error = py::register_exception<CutterError>(m, "CutterError", error.ptr());
  py::register_exception<KTooLarge>(m, "KTooLarge", cutter_error.ptr());
  py::register_exception<InvalidCutNode>(m, "InvalidCutNode", cutter_error.ptr());
  py::register_exception<InsufficientLabels>(m, "InsufficientLabels", cutter_error.ptr());

  py::class_<Triangulation>(m, "Triangulation")
      .def_readonly("triangles", &Triangulation::triangles)
      .def_readonly("hull", &Triangulation::hull)
      .def_readonly("neighbors", &Triangulation::neighbor_sets)
      .def_property_readonly("hull_area", &Triangulation::hull_area)
      .def("to_json", [](const Triangulation& t) { return TriangulationToJson(t); });

  py::class_<InTree>(m, "InTree")
      .def_readonly("parent", &InTree::parent)
      .def_readonly("edge_length", &InTree::edge_length)
      .def_readonly("potential", &InTree::potential)
      .def_readonly("cut_flags", &InTree::cut_flags)
      .def("roots", &InTree::roots)
      .def("__len__", &InTree::size)
      .def("to_json", [](const InTree& t) { return InTreeToJson(t); })
      .def_static("from_json", [](const std::string& s) { return InTreeFromJson(s); });

  py::class_<ClusterAssignment>(m, "ClusterAssignment")
      .def_readonly("cluster_id", &ClusterAssignment::cluster_id)
      .def_readonly("k", &ClusterAssignment::k)
      .def_readonly("roots", &ClusterAssignment::roots);

  py::class_<CutResult>(m, "CutResult")
      .def_readonly("cut_nodes", &CutResult::cut_nodes)
      .def_readonly("assignment", &CutResult::assignment)
      .def_readonly("impure_residue", &CutResult::impure_residue);

  m.def("delaunay", [](const PyPoints& p) { return Delaunay(ToPoints(p)); }, py::arg("points"));
  m.def("local_size",
        [](const PyPoints& p, const std::string& sdef) {
          return LocalSize(Delaunay(ToPoints(p)), SizeKind(sdef));
        },
        py::arg("points"), py::arg("sdef") = "simplex");
  m.def("transform",
        [](const std::vector<double>& s, const std::string& name) {
          return Transform(s, TransformByName(name));
        },
        py::arg("s"), py::arg("transform") = "log-ratio");
  m.def("build_it",
        [](const PyPoints& p, const std::vector<double>& potential) {
          return BuildInTree(ToPoints(p), potential);
        },
        py::arg("points"), py::arg("potential"));
  m.def("delaunay_descent",
        [](const PyPoints& p, const std::vector<double>& potential) {
          return DelaunayDescent(Delaunay(ToPoints(p)), potential);
        },
        py::arg("points"), py::arg("potential"));
  m.def("assign_clusters", &AssignClusters, py::arg("tree"));
  m.def("decision_graph", [](const InTree& tree) {
    std::vector<std::tuple<std::size_t, double, double>> out;
    for (const auto& e : BuildDecisionGraph(tree)) out.emplace_back(e.node, e.p, e.w);
    return out;
  });
  m.def("dg_auto_cut", &DecisionGraphAutoCut, py::arg("tree"), py::arg("k"));
  m.def("dg_manual_cut",
        [](const InTree& tree, const std::vector<std::size_t>& nodes) {
          return DecisionGraphManualCut(tree, nodes);
        },
        py::arg("tree"), py::arg("cut_nodes"));
  m.def("ss_divisive_cut", &SemiSupervisedCut, py::arg("tree"), py::arg("labels"));

  m.def("load_points",
        [](const std::string& path, bool header) {
          const Dataset d = LoadPoints(path, LoadOptions{.skip_header = header});
          PyPoints pts;
          for (const Point2& q : d.points) pts.emplace_back(q.x, q.y);
          return std::make_pair(pts, d.ground_truth);
        },
        py::arg("path"), py::arg("header") = false);
  m.def("sample_labels",
        [](const std::vector<std::size_t>& gt, std::size_t per_cluster, std::uint64_t seed) {
          return SampleLabels(gt, per_cluster, seed);
        },
        py::arg("ground_truth"), py::arg("per_cluster"), py::arg("seed"));
  m.def("purity",
        [](const std::vector<std::size_t>& f, const std::vector<std::size_t>& t) {
          return Purity(f, t);
        });
  m.def("adjusted_rand_index",
        [](const std::vector<std::size_t>& f, const std::vector<std::size_t>& t) {
          return AdjustedRandIndex(f, t);
        });
}
