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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace itclust {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double Distance(const Point2& a, const Point2& b);
double SquaredDistance(const Point2& a, const Point2& b);

using Triangle = std::array<std::size_t, 3>;

/// Delaunay triangulation of a planar point set.
///
/// Exact duplicates are collapsed onto their lowest-index occurrence (the
/// representative) before triangulating, so triangle and hull entries only
/// ever name representatives. Indices always refer to the caller's original
/// point order.
struct Triangulation {
  std::vector<Point2> points;
  /// Counter-clockwise triples, each rotated so its smallest index comes
  /// first, sorted lexicographically.
  std::vector<Triangle> triangles;
  /// Boundary vertices in counter-clockwise order starting at the smallest
  /// index. Points lying in the interior of a hull side are included.
  std::vector<std::size_t> hull;
  /// Sorted Delaunay neighbours per point; empty for non-representatives.
  std::vector<std::vector<std::size_t>> neighbor_sets;
  /// representative[i] == i for distinct points.
  std::vector<std::size_t> representative;

  std::size_t num_sites() const;
  std::size_t num_edges() const;
  double triangle_area(std::size_t tri) const;
  /// Shoelace area of the hull polygon.
  double hull_area() const;
};

/// Index of the lowest-index exact duplicate for every point.
std::vector<std::size_t> CollapseDuplicates(std::span<const Point2> points);

/// Incremental Bowyer-Watson construction with exact predicates. Cocircular
/// ties are resolved by index-keyed symbolic perturbation, so the result is
/// unique and independent of insertion order.
/// Throws DegenerateInput for fewer than three distinct points or when all
/// distinct points are collinear.
Triangulation Delaunay(std::span<const Point2> points);

/// Test oracle: keeps every counter-clockwise triple whose (perturbed)
/// circumcircle is empty. O(n^4); intended for n <= ~14.
Triangulation BruteForceDelaunay(std::span<const Point2> points);

struct ConvexHull {
  std::vector<std::size_t> indices;
  double area = 0.0;
};

/// Counter-clockwise hull starting at the smallest index, including points
/// in the interior of hull sides. Duplicates are represented once.
ConvexHull ComputeConvexHull(std::span<const Point2> points);

/// Area of each point's Voronoi cell clipped to the convex hull of the data.
/// Duplicates receive their representative's area.
std::vector<double> VoronoiCellAreas(const Triangulation& tri);

/// The clipped Voronoi cell of a representative as a counter-clockwise
/// polygon.
std::vector<Point2> ClippedVoronoiCell(const Triangulation& tri,
                                       std::size_t site);

/// Signed shoelace area.
double PolygonArea(std::span<const Point2> polygon);

/// Debug export: {"points": [[x,y],...], "triangles": [[i,j,k],...],
/// "hull": [...]}.
std::string TriangulationToJson(const Triangulation& tri);

}  // namespace itclust
