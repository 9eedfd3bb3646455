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

#include "itclust/potential.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "itclust/errors.hpp"

namespace itclust {
namespace {

constexpr std::array<std::pair<LocalSizeKind, std::string_view>, 7> kSizeNames{{
    {LocalSizeKind::kNeighborSimplexVolume, "simplex"},
    {LocalSizeKind::kVoronoiCellVolume, "voronoi"},
    {LocalSizeKind::kMedianNeighborDistance, "median"},
    {LocalSizeKind::kMeanNeighborDistance, "mean"},
    {LocalSizeKind::kMaxNeighborDistance, "max"},
    {LocalSizeKind::kMinNeighborDistance, "min"},
    {LocalSizeKind::kSumNeighborDistance, "sum"},
}};

constexpr std::array<std::pair<TransformKind, std::string_view>, 5>
    kTransformNames{{
        {TransformKind::kIdentity, "id"},
        {TransformKind::kLogRatio, "log-ratio"},
        {TransformKind::kLog1p, "log1p"},
        {TransformKind::kNegExp, "negexp"},
        {TransformKind::kSigmoid, "sigmoid"},
    }};

double Statistic(std::vector<double> d, LocalSizeKind kind) {
  switch (kind) {
    case LocalSizeKind::kMedianNeighborDistance: {
      std::sort(d.begin(), d.end());
      const std::size_t m = d.size() / 2;
      return d.size() % 2 == 1 ? d[m] : 0.5 * (d[m - 1] + d[m]);
    }
    case LocalSizeKind::kMeanNeighborDistance:
      return std::accumulate(d.begin(), d.end(), 0.0) /
             static_cast<double>(d.size());
    case LocalSizeKind::kMaxNeighborDistance:
      return *std::max_element(d.begin(), d.end());
    case LocalSizeKind::kMinNeighborDistance:
      return *std::min_element(d.begin(), d.end());
    case LocalSizeKind::kSumNeighborDistance:
      return std::accumulate(d.begin(), d.end(), 0.0);
    default:
      break;
  }
  throw InputError("not a distance statistic: " + std::string(ToString(kind)));
}

}  // namespace

bool IsDistanceStatistic(LocalSizeKind kind) {
  return kind != LocalSizeKind::kNeighborSimplexVolume &&
         kind != LocalSizeKind::kVoronoiCellVolume;
}

std::vector<double> LocalSize(const Triangulation& tri, LocalSizeKind kind) {
  const std::size_t n = tri.points.size();
  std::vector<double> s(n, 0.0);
  switch (kind) {
    case LocalSizeKind::kNeighborSimplexVolume:
      for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        const double area = tri.triangle_area(t);
        for (std::size_t v : tri.triangles[t]) s[v] += area;
      }
      break;
    case LocalSizeKind::kVoronoiCellVolume:
      s = VoronoiCellAreas(tri);
      break;
    default:
      for (std::size_t i = 0; i < n; ++i) {
        if (tri.representative[i] != i) continue;
        std::vector<double> d;
        d.reserve(tri.neighbor_sets[i].size());
        for (std::size_t j : tri.neighbor_sets[i]) {
          d.push_back(Distance(tri.points[i], tri.points[j]));
        }
        s[i] = Statistic(std::move(d), kind);
      }
      break;
  }
  for (std::size_t i = 0; i < n; ++i) s[i] = s[tri.representative[i]];
  return s;
}

std::vector<double> LocalSizeCompleteGraph(std::span<const Point2> points,
                                           LocalSizeKind kind) {
  if (!IsDistanceStatistic(kind)) {
    throw DegenerateInput(std::string(ToString(kind)) +
                          " needs a triangulation");
  }
  const std::vector<std::size_t> rep = CollapseDuplicates(points);
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (rep[i] == i) sites.push_back(i);
  }
  if (sites.size() < 2) {
    throw DegenerateInput("need at least 2 distinct points");
  }
  std::vector<double> s(points.size(), 0.0);
  for (std::size_t i : sites) {
    std::vector<double> d;
    for (std::size_t j : sites) {
      if (j != i) d.push_back(Distance(points[i], points[j]));
    }
    s[i] = Statistic(std::move(d), kind);
  }
  for (std::size_t i = 0; i < points.size(); ++i) s[i] = s[rep[i]];
  return s;
}

std::vector<double> Transform(std::span<const double> s, TransformKind t) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] > 0.0)) {
      throw NonPositiveSize("local size of point " + std::to_string(i) +
                            " is not positive");
    }
  }
  const double min_s =
      s.empty() ? 1.0 : *std::min_element(s.begin(), s.end());
  auto f = [&](double x) {
    switch (t) {
      case TransformKind::kIdentity:
        return x;
      case TransformKind::kLogRatio:
        return std::log1p(x / min_s);
      case TransformKind::kLog1p:
        return std::log1p(x);
      case TransformKind::kNegExp:
        return -std::exp(-x);
      case TransformKind::kSigmoid:
        return 1.0 / (1.0 + std::exp(-x));
    }
    return x;
  };
  std::vector<double> p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) p[i] = f(s[i]);
  if (t == TransformKind::kIdentity) return p;

  // Restore strict order where rounding collapsed or inverted it.
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::size_t prev = order[k - 1];
    const std::size_t cur = order[k];
    if (s[cur] == s[prev]) {
      p[cur] = p[prev];
    } else if (!(p[cur] > p[prev])) {
      p[cur] = std::nextafter(p[prev], std::numeric_limits<double>::infinity());
    }
  }
  return p;
}

PotentialField ComputePotential(const Triangulation& tri, LocalSizeKind kind,
                                TransformKind t) {
  PotentialField field;
  field.kind = kind;
  field.transform = t;
  field.s = LocalSize(tri, kind);
  field.p = Transform(field.s, t);
  return field;
}

std::string_view ToString(LocalSizeKind kind) {
  for (const auto& [k, name] : kSizeNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::string_view ToString(TransformKind t) {
  for (const auto& [k, name] : kTransformNames) {
    if (k == t) return name;
  }
  return "unknown";
}

std::optional<LocalSizeKind> ParseLocalSizeKind(std::string_view name) {
  for (const auto& [k, n] : kSizeNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::optional<TransformKind> ParseTransformKind(std::string_view name) {
  for (const auto& [k, n] : kTransformNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

}  // namespace itclust
