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

#include "itclust/geometry2d.hpp"

namespace itclust {

/// Nonparametric local size S_i of a point. Large values mean sparse
/// surroundings; density estimators use the reciprocal.
enum class LocalSizeKind {
  kNeighborSimplexVolume,   // summed area of incident Delaunay triangles
  kVoronoiCellVolume,       // hull-clipped Voronoi cell area
  kMedianNeighborDistance,  // median distance to Delaunay neighbours
  kMeanNeighborDistance,
  kMaxNeighborDistance,
  kMinNeighborDistance,
  kSumNeighborDistance,
};

/// Strictly increasing map from local size to potential.
enum class TransformKind {
  kIdentity,  // x
  kLogRatio,  // log(1 + x / min S)
  kLog1p,     // log(1 + x)
  kNegExp,    // -exp(-x)
  kSigmoid,   // 1 / (1 + exp(-x))
};

struct PotentialField {
  std::vector<double> s;
  std::vector<double> p;
  LocalSizeKind kind = LocalSizeKind::kNeighborSimplexVolume;
  TransformKind transform = TransformKind::kLogRatio;
};

/// Per-point local size; duplicates share their representative's value.
std::vector<double> LocalSize(const Triangulation& tri, LocalSizeKind kind);

/// Distance statistic over the complete graph of distinct points. Only valid
/// for the distance-statistic kinds; used when the data cannot be
/// triangulated and the caller opts in explicitly.
std::vector<double> LocalSizeCompleteGraph(std::span<const Point2> points,
                                           LocalSizeKind kind);

/// Elementwise f(S). Throws NonPositiveSize if any S_i <= 0.
///
/// Floating-point evaluation of a saturating f can merge or swap values
/// whose sizes differ by less than its resolution; such results are nudged
/// by the minimum number of ulps needed so that S_i < S_j <=> P_i < P_j and
/// S_i == S_j <=> P_i == P_j hold exactly.
std::vector<double> Transform(std::span<const double> s, TransformKind t);

PotentialField ComputePotential(const Triangulation& tri, LocalSizeKind kind,
                                TransformKind t);

bool IsDistanceStatistic(LocalSizeKind kind);

std::string_view ToString(LocalSizeKind kind);
std::string_view ToString(TransformKind t);
std::optional<LocalSizeKind> ParseLocalSizeKind(std::string_view name);
std::optional<TransformKind> ParseTransformKind(std::string_view name);

}  // namespace itclust
