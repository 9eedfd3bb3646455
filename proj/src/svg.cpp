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

#include "itclust/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>

namespace itclust {
namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 16.0;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  // Avoid "-0.00".
  if (std::string_view(buf) == "-0.00") return "0.00";
  return buf;
}

// Uniform scale that fits the data bounds into the square canvas, y up.
class Viewport {
 public:
  explicit Viewport(std::span<const Point2> points) {
    if (points.empty()) return;
    min_x_ = max_x_ = points[0].x;
    min_y_ = max_y_ = points[0].y;
    for (const Point2& p : points) {
      min_x_ = std::min(min_x_, p.x);
      max_x_ = std::max(max_x_, p.x);
      min_y_ = std::min(min_y_, p.y);
      max_y_ = std::max(max_y_, p.y);
    }
    const double span = std::max(max_x_ - min_x_, max_y_ - min_y_);
    scale_ = span > 0.0 ? (kSize - 2 * kMargin) / span : 1.0;
  }
  double X(double x) const { return kMargin + (x - min_x_) * scale_; }
  double Y(double y) const { return kSize - kMargin - (y - min_y_) * scale_; }

 private:
  double min_x_ = 0.0, max_x_ = 0.0, min_y_ = 0.0, max_y_ = 0.0;
  double scale_ = 1.0;
};

std::string Header(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         Num(width) + "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " +
         Num(width) + " " + Num(height) + "\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

std::string Line(double x1, double y1, double x2, double y2,
                 std::string_view stroke, double width) {
  return "<line x1=\"" + Num(x1) + "\" y1=\"" + Num(y1) + "\" x2=\"" + Num(x2) +
         "\" y2=\"" + Num(y2) + "\" stroke=\"" + std::string(stroke) +
         "\" stroke-width=\"" + Num(width) + "\"/>\n";
}

std::string Circle(double cx, double cy, double r, std::string_view fill) {
  return "<circle cx=\"" + Num(cx) + "\" cy=\"" + Num(cy) + "\" r=\"" + Num(r) +
         "\" fill=\"" + std::string(fill) + "\"/>\n";
}

std::string Marker(double cx, double cy, double r, std::string_view fill) {
  return "<polygon points=\"" + Num(cx) + "," + Num(cy - r) + " " +
         Num(cx - r) + "," + Num(cy + r) + " " + Num(cx + r) + "," +
         Num(cy + r) + "\" fill=\"" + std::string(fill) +
         "\" stroke=\"#000000\" stroke-width=\"0.80\"/>\n";
}

std::vector<std::string_view> PotentialColors(std::span<const double> p) {
  std::vector<std::string_view> colors(p.size(), kSequentialPalette[0]);
  if (p.empty()) return colors;
  const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  const double range = *hi - *lo;
  constexpr std::size_t kStops = std::size(kSequentialPalette);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double t = range > 0.0 ? (p[i] - *lo) / range : 0.0;
    const auto bin = static_cast<std::size_t>(std::lround(t * (kStops - 1)));
    colors[i] = kSequentialPalette[std::min(bin, kStops - 1)];
  }
  return colors;
}

std::string_view CategoryColor(std::size_t id) {
  return kCategoricalPalette[id % std::size(kCategoricalPalette)];
}

}  // namespace

std::optional<SvgView> ParseSvgView(std::string_view name) {
  if (name == "delaunay_potential") return SvgView::kDelaunayPotential;
  if (name == "it_potential") return SvgView::kItPotential;
  if (name == "clusters") return SvgView::kClusters;
  if (name == "decision_graph") return SvgView::kDecisionGraph;
  return std::nullopt;
}

std::string_view ToString(SvgView view) {
  switch (view) {
    case SvgView::kDelaunayPotential:
      return "delaunay_potential";
    case SvgView::kItPotential:
      return "it_potential";
    case SvgView::kClusters:
      return "clusters";
    case SvgView::kDecisionGraph:
      return "decision_graph";
  }
  return "unknown";
}

std::string RenderDelaunaySvg(const Triangulation& tri,
                              std::span<const double> potential) {
  const Viewport view(tri.points);
  std::string out = Header(kSize, kSize);
  out += "<g id=\"edges\">\n";
  for (std::size_t i = 0; i < tri.neighbor_sets.size(); ++i) {
    for (std::size_t j : tri.neighbor_sets[i]) {
      if (j < i) continue;
      out += Line(view.X(tri.points[i].x), view.Y(tri.points[i].y),
                  view.X(tri.points[j].x), view.Y(tri.points[j].y), "#9e9e9e",
                  0.6);
    }
  }
  out += "</g>\n<g id=\"nodes\">\n";
  const auto colors = PotentialColors(potential);
  for (std::size_t i = 0; i < tri.points.size(); ++i) {
    out += Circle(view.X(tri.points[i].x), view.Y(tri.points[i].y), 2.5,
                  colors[i]);
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string RenderInTreeSvg(std::span<const Point2> points, const InTree& tree) {
  const Viewport view(points);
  std::string out = Header(kSize, kSize);
  out += "<g id=\"edges\">\n";
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (tree.is_root(i)) continue;
    const Point2& a = points[i];
    const Point2& b = points[tree.parent[i]];
    out += Line(view.X(a.x), view.Y(a.y), view.X(b.x), view.Y(b.y), "#616161",
                0.8);
  }
  out += "</g>\n<g id=\"nodes\">\n";
  const auto colors = PotentialColors(tree.potential);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += Circle(view.X(points[i].x), view.Y(points[i].y),
                  tree.is_root(i) ? 4.0 : 2.5, colors[i]);
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string RenderClustersSvg(std::span<const Point2> points,
                              const ClusterAssignment& assignment,
                              const LabelSet& labels) {
  const Viewport view(points);
  std::string out = Header(kSize, kSize);
  out += "<g id=\"nodes\">\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (labels.count(i)) continue;
    out += Circle(view.X(points[i].x), view.Y(points[i].y), 2.5,
                  CategoryColor(assignment.cluster_id[i]));
  }
  out += "</g>\n<g id=\"labels\">\n";
  for (const auto& [i, label] : labels) {
    if (i >= points.size()) continue;
    out += Marker(view.X(points[i].x), view.Y(points[i].y), 5.0,
                  CategoryColor(assignment.cluster_id[i]));
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string RenderDecisionGraphSvg(const DecisionGraph& graph,
                                   std::span<const std::size_t> selected) {
  constexpr double kWidth = 480.0;
  constexpr double kHeight = 360.0;
  constexpr double kPad = 40.0;
  const std::set<std::size_t> chosen(selected.begin(), selected.end());
  double p_lo = 0.0, p_hi = 1.0, w_lo = 0.0, w_hi = 1.0;
  if (!graph.empty()) {
    p_lo = p_hi = graph[0].p;
    w_hi = graph[0].w;
    for (const auto& e : graph) {
      p_lo = std::min(p_lo, e.p);
      p_hi = std::max(p_hi, e.p);
      w_hi = std::max(w_hi, e.w);
    }
  }
  auto sx = [&](double p) {
    return p_hi > p_lo ? kPad + (p - p_lo) / (p_hi - p_lo) * (kWidth - 2 * kPad)
                       : kWidth / 2;
  };
  auto sy = [&](double w) {
    return w_hi > w_lo
               ? kHeight - kPad - (w - w_lo) / (w_hi - w_lo) * (kHeight - 2 * kPad)
               : kHeight / 2;
  };
  std::string out = Header(kWidth, kHeight);
  out += "<g id=\"axes\">\n";
  out += Line(kPad, kHeight - kPad, kWidth - kPad, kHeight - kPad, "#000000", 1.0);
  out += Line(kPad, kHeight - kPad, kPad, kPad, "#000000", 1.0);
  out += "<text x=\"" + Num(kWidth / 2) + "\" y=\"" + Num(kHeight - 10) +
         "\" font-family=\"sans-serif\" font-size=\"12\" "
         "text-anchor=\"middle\">P</text>\n";
  out += "<text x=\"14.00\" y=\"" + Num(kHeight / 2) +
         "\" font-family=\"sans-serif\" font-size=\"12\" "
         "text-anchor=\"middle\">W</text>\n";
  out += "</g>\n<g id=\"entries\">\n";
  for (const auto& e : graph) {
    out += Circle(sx(e.p), sy(e.w), chosen.count(e.node) ? 3.5 : 2.5,
                  chosen.count(e.node) ? "#1f77b4" : "#7f7f7f");
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace itclust
