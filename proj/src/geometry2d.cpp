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

#include "itclust/geometry2d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "itclust/errors.hpp"
#include "itclust/predicates.hpp"

namespace itclust {

double SquaredDistance(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double Distance(const Point2& a, const Point2& b) {
  return std::sqrt(SquaredDistance(a, b));
}

namespace {

int Orient(const Point2& a, const Point2& b, const Point2& c) {
  return predicates::orient2d(a.x, a.y, b.x, b.y, c.x, c.y);
}

void CheckFinite(std::span<const Point2> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw InputError("point " + std::to_string(i) +
                       " has a non-finite coordinate");
    }
  }
}

// Distinct representatives in increasing index order.
std::vector<std::size_t> Sites(const std::vector<std::size_t>& rep) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (rep[i] == i) sites.push_back(i);
  }
  return sites;
}

// Deterministic Fisher-Yates driven by splitmix64.
void Shuffle(std::vector<int>& order) {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  auto next = [&state]() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(next() % i);
    std::swap(order[i - 1], order[j]);
  }
}

// Rotates a counter-clockwise triple so the smallest index comes first.
Triangle Canonical(Triangle t) {
  const auto it = std::min_element(t.begin(), t.end());
  std::rotate(t.begin(), it, t.end());
  return t;
}

void FillNeighborSets(Triangulation& tri) {
  tri.neighbor_sets.assign(tri.points.size(), {});
  for (const Triangle& t : tri.triangles) {
    for (int i = 0; i < 3; ++i) {
      const std::size_t a = t[i];
      const std::size_t b = t[(i + 1) % 3];
      tri.neighbor_sets[a].push_back(b);
      tri.neighbor_sets[b].push_back(a);
    }
  }
  for (auto& n : tri.neighbor_sets) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
}

void RequireTriangulable(std::span<const Point2> points,
                         const std::vector<std::size_t>& sites) {
  if (sites.size() < 3) {
    throw DegenerateInput("need at least 3 distinct points, got " +
                          std::to_string(sites.size()));
  }
  const Point2& a = points[sites[0]];
  const Point2& b = points[sites[1]];
  for (std::size_t k = 2; k < sites.size(); ++k) {
    if (Orient(a, b, points[sites[k]]) != 0) return;
  }
  throw DegenerateInput("all distinct points are collinear");
}

// Bowyer-Watson over the distinct sites, with ghost triangles standing in for
// the unbounded region so that no super-triangle can distort the hull.
class Builder {
 public:
  static constexpr int kInfinite = -1;

  explicit Builder(std::vector<Point2> sites) : sites_(std::move(sites)) {}

  void Run() {
    const int n = static_cast<int>(sites_.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Shuffle(order);
    for (int k = 2; k < n; ++k) {
      if (Orient(sites_[order[0]], sites_[order[1]], sites_[order[k]]) != 0) {
        std::swap(order[2], order[k]);
        break;
      }
    }
    Initialize(order[0], order[1], order[2]);
    mark_.reserve(static_cast<std::size_t>(2 * n + 8));
    for (int k = 3; k < n; ++k) Insert(order[k]);
  }

  std::vector<Triangle> FiniteTriangles() const {
    std::vector<Triangle> out;
    for (const Tri& t : tris_) {
      if (!t.alive || IsGhost(t)) continue;
      out.push_back({static_cast<std::size_t>(t.v[0]),
                     static_cast<std::size_t>(t.v[1]),
                     static_cast<std::size_t>(t.v[2])});
    }
    return out;
  }

  // Hull edges as (from, to) in counter-clockwise traversal.
  std::vector<std::pair<int, int>> HullEdges() const {
    std::vector<std::pair<int, int>> edges;
    for (const Tri& t : tris_) {
      if (!t.alive || !IsGhost(t)) continue;
      const int g = GhostSlot(t);
      const int a = t.v[(g + 1) % 3];
      const int b = t.v[(g + 2) % 3];
      edges.emplace_back(b, a);
    }
    return edges;
  }

 private:
  struct Tri {
    std::array<int, 3> v;
    std::array<int, 3> n{-1, -1, -1};
    bool alive = true;
  };

  static bool IsGhost(const Tri& t) {
    return t.v[0] == kInfinite || t.v[1] == kInfinite || t.v[2] == kInfinite;
  }
  static int GhostSlot(const Tri& t) {
    for (int i = 0; i < 3; ++i) {
      if (t.v[i] == kInfinite) return i;
    }
    return -1;
  }

  void Initialize(int a, int b, int c) {
    if (Orient(sites_[a], sites_[b], sites_[c]) < 0) std::swap(b, c);
    tris_.push_back({{a, b, c}});
    tris_.push_back({{b, a, kInfinite}});
    tris_.push_back({{c, b, kInfinite}});
    tris_.push_back({{a, c, kInfinite}});
    // Pair up directed edges with their reverses.
    std::unordered_map<std::int64_t, std::pair<int, int>> edges;
    auto key = [](int u, int w) {
      return (static_cast<std::int64_t>(u) + 1) * (1ll << 32) +
             (static_cast<std::int64_t>(w) + 1);
    };
    for (int t = 0; t < 4; ++t) {
      for (int i = 0; i < 3; ++i) {
        edges[key(tris_[t].v[(i + 1) % 3], tris_[t].v[(i + 2) % 3])] = {t, i};
      }
    }
    for (int t = 0; t < 4; ++t) {
      for (int i = 0; i < 3; ++i) {
        const auto& other =
            edges.at(key(tris_[t].v[(i + 2) % 3], tris_[t].v[(i + 1) % 3]));
        tris_[t].n[i] = other.first;
      }
    }
    last_ = 0;
  }

  bool InConflict(int t, int p) const {
    const Tri& tri = tris_[t];
    const Point2& q = sites_[p];
    const int g = GhostSlot(tri);
    if (g < 0) {
      const Point2& a = sites_[tri.v[0]];
      const Point2& b = sites_[tri.v[1]];
      const Point2& c = sites_[tri.v[2]];
      return predicates::incircle_perturbed(a.x, a.y, tri.v[0], b.x, b.y,
                                            tri.v[1], c.x, c.y, tri.v[2], q.x,
                                            q.y, p) > 0;
    }
    // Ghost (a, b, inf) covers the open half-plane left of a->b plus the
    // open hull segment between a and b.
    const Point2& a = sites_[tri.v[(g + 1) % 3]];
    const Point2& b = sites_[tri.v[(g + 2) % 3]];
    const int o = Orient(a, b, q);
    if (o != 0) return o > 0;
    if (a.x != b.x) {
      return std::min(a.x, b.x) < q.x && q.x < std::max(a.x, b.x);
    }
    return std::min(a.y, b.y) < q.y && q.y < std::max(a.y, b.y);
  }

  int Locate(int p) {
    const Point2& q = sites_[p];
    int t = last_;
    const std::size_t limit = 4 * tris_.size() + 16;
    for (std::size_t step = 0; step < limit; ++step) {
      const Tri& tri = tris_[t];
      if (IsGhost(tri)) return t;
      bool moved = false;
      const int offset = static_cast<int>(walk_counter_++ % 3);
      for (int k = 0; k < 3; ++k) {
        const int i = (k + offset) % 3;
        const Point2& a = sites_[tri.v[(i + 1) % 3]];
        const Point2& b = sites_[tri.v[(i + 2) % 3]];
        if (Orient(a, b, q) < 0) {
          t = tri.n[i];
          moved = true;
          break;
        }
      }
      if (!moved) return t;
    }
    for (std::size_t s = 0; s < tris_.size(); ++s) {
      if (tris_[s].alive && InConflict(static_cast<int>(s), p)) {
        return static_cast<int>(s);
      }
    }
    throw DegenerateInput("point location failed");
  }

  void Insert(int p) {
    const int start = Locate(p);
    mark_.resize(tris_.size(), 0);
    ++stamp_;
    const std::uint32_t in_cavity = 2 * stamp_;
    const std::uint32_t outside = 2 * stamp_ + 1;

    struct Boundary {
      int from, to, neighbor;
    };
    std::vector<int> cavity{start};
    std::vector<Boundary> boundary;
    mark_[start] = in_cavity;
    for (std::size_t c = 0; c < cavity.size(); ++c) {
      const Tri tri = tris_[cavity[c]];
      for (int i = 0; i < 3; ++i) {
        const int nb = tri.n[i];
        if (mark_[nb] == in_cavity) continue;
        if (mark_[nb] != outside && InConflict(nb, p)) {
          mark_[nb] = in_cavity;
          cavity.push_back(nb);
        } else {
          mark_[nb] = outside;
          boundary.push_back({tri.v[(i + 1) % 3], tri.v[(i + 2) % 3], nb});
        }
      }
    }

    // Boundary edges whose neighbour turned out to be in the cavity after they
    // were recorded are interior, not boundary.
    std::erase_if(boundary,
                  [&](const Boundary& b) { return mark_[b.neighbor] == in_cavity; });

    for (int t : cavity) tris_[t].alive = false;

    std::unordered_map<int, int> by_from, by_to;
    by_from.reserve(boundary.size());
    by_to.reserve(boundary.size());
    for (const Boundary& b : boundary) {
      const int id = static_cast<int>(tris_.size());
      Tri fresh{{b.from, b.to, p}};
      fresh.n[2] = b.neighbor;
      Tri& outer = tris_[b.neighbor];
      for (int j = 0; j < 3; ++j) {
        if (outer.v[j] != b.from && outer.v[j] != b.to) outer.n[j] = id;
      }
      tris_.push_back(fresh);
      by_from[b.from] = id;
      by_to[b.to] = id;
    }
    for (const Boundary& b : boundary) {
      const int id = by_from.at(b.from);
      tris_[id].n[0] = by_from.at(b.to);
      tris_[id].n[1] = by_to.at(b.from);
      if (!IsGhost(tris_[id])) last_ = id;
    }
  }

  std::vector<Point2> sites_;
  std::vector<Tri> tris_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::uint64_t walk_counter_ = 0;
  int last_ = 0;
};

std::vector<std::size_t> OrderHull(
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::unordered_map<std::size_t, std::size_t> next;
  std::size_t first = edges.front().first;
  for (const auto& [from, to] : edges) {
    next[from] = to;
    first = std::min(first, from);
  }
  std::vector<std::size_t> hull{first};
  for (std::size_t v = next.at(first); v != first; v = next.at(v)) {
    hull.push_back(v);
    if (hull.size() > edges.size()) throw DegenerateInput("hull is not a cycle");
  }
  return hull;
}

Triangulation MakeBase(std::span<const Point2> points) {
  CheckFinite(points);
  Triangulation tri;
  tri.points.assign(points.begin(), points.end());
  tri.representative = CollapseDuplicates(points);
  return tri;
}

}  // namespace

std::vector<std::size_t> CollapseDuplicates(std::span<const Point2> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    return points[a].y < points[b].y;
  });
  std::vector<std::size_t> rep(points.size());
  for (std::size_t k = 0; k < order.size();) {
    std::size_t end = k + 1;
    while (end < order.size() && points[order[end]] == points[order[k]]) ++end;
    // stable_sort keeps the lowest index first within a run of equal points.
    for (std::size_t m = k; m < end; ++m) rep[order[m]] = order[k];
    k = end;
  }
  return rep;
}

std::size_t Triangulation::num_sites() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < representative.size(); ++i) {
    count += representative[i] == i;
  }
  return count;
}

std::size_t Triangulation::num_edges() const {
  std::size_t degree = 0;
  for (const auto& n : neighbor_sets) degree += n.size();
  return degree / 2;
}

double Triangulation::triangle_area(std::size_t tri) const {
  const Triangle& t = triangles.at(tri);
  const Point2& a = points[t[0]];
  const Point2& b = points[t[1]];
  const Point2& c = points[t[2]];
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double Triangulation::hull_area() const {
  std::vector<Point2> polygon;
  polygon.reserve(hull.size());
  for (std::size_t h : hull) polygon.push_back(points[h]);
  return PolygonArea(polygon);
}

Triangulation Delaunay(std::span<const Point2> points) {
  Triangulation tri = MakeBase(points);
  const std::vector<std::size_t> sites = Sites(tri.representative);
  RequireTriangulable(points, sites);

  std::vector<Point2> local;
  local.reserve(sites.size());
  for (std::size_t s : sites) local.push_back(points[s]);
  Builder builder(std::move(local));
  builder.Run();

  for (Triangle t : builder.FiniteTriangles()) {
    for (std::size_t& v : t) v = sites[v];
    tri.triangles.push_back(Canonical(t));
  }
  std::sort(tri.triangles.begin(), tri.triangles.end());

  std::vector<std::pair<std::size_t, std::size_t>> hull_edges;
  for (const auto& [from, to] : builder.HullEdges()) {
    hull_edges.emplace_back(sites[from], sites[to]);
  }
  tri.hull = OrderHull(hull_edges);
  FillNeighborSets(tri);
  return tri;
}

Triangulation BruteForceDelaunay(std::span<const Point2> points) {
  Triangulation tri = MakeBase(points);
  const std::vector<std::size_t> sites = Sites(tri.representative);
  RequireTriangulable(points, sites);

  const std::size_t m = sites.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        std::size_t a = sites[i], b = sites[j], c = sites[k];
        const int o = Orient(points[a], points[b], points[c]);
        if (o == 0) continue;
        if (o < 0) std::swap(b, c);
        bool empty = true;
        for (std::size_t l = 0; l < m && empty; ++l) {
          const std::size_t d = sites[l];
          if (d == a || d == b || d == c) continue;
          empty = predicates::incircle_perturbed(
                      points[a].x, points[a].y, static_cast<long>(a),
                      points[b].x, points[b].y, static_cast<long>(b),
                      points[c].x, points[c].y, static_cast<long>(c),
                      points[d].x, points[d].y, static_cast<long>(d)) < 0;
        }
        if (empty) tri.triangles.push_back(Canonical({a, b, c}));
      }
    }
  }
  std::sort(tri.triangles.begin(), tri.triangles.end());
  tri.hull = ComputeConvexHull(points).indices;
  FillNeighborSets(tri);
  return tri;
}

ConvexHull ComputeConvexHull(std::span<const Point2> points) {
  CheckFinite(points);
  const std::vector<std::size_t> rep = CollapseDuplicates(points);
  std::vector<std::size_t> sites = Sites(rep);
  RequireTriangulable(points, sites);

  std::sort(sites.begin(), sites.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    return points[a].y < points[b].y;
  });
  // Monotone chain, keeping collinear boundary points.
  auto chain = [&](auto begin, auto end) {
    std::vector<std::size_t> out;
    for (auto it = begin; it != end; ++it) {
      while (out.size() >= 2 &&
             Orient(points[out[out.size() - 2]], points[out.back()],
                    points[*it]) < 0) {
        out.pop_back();
      }
      out.push_back(*it);
    }
    out.pop_back();
    return out;
  };
  std::vector<std::size_t> hull = chain(sites.begin(), sites.end());
  const std::vector<std::size_t> upper = chain(sites.rbegin(), sites.rend());
  hull.insert(hull.end(), upper.begin(), upper.end());
  std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()),
              hull.end());

  ConvexHull result;
  std::vector<Point2> polygon;
  for (std::size_t h : hull) polygon.push_back(points[h]);
  result.area = PolygonArea(polygon);
  result.indices = std::move(hull);
  return result;
}

double PolygonArea(std::span<const Point2> polygon) {
  double twice = 0.0;
  for (std::size_t i = 0, n = polygon.size(); i < n; ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[(i + 1) % n];
    twice += a.x * b.y - a.y * b.x;
  }
  return 0.5 * twice;
}

std::vector<Point2> ClippedVoronoiCell(const Triangulation& tri,
                                       std::size_t site) {
  std::vector<Point2> cell;
  for (std::size_t h : tri.hull) cell.push_back(tri.points[h]);
  const Point2& p = tri.points[site];
  std::vector<Point2> next;
  for (std::size_t j : tri.neighbor_sets[site]) {
    const Point2& q = tri.points[j];
    // Keep the side closer to p: (q - p) . (x - mid) <= 0.
    const double nx = q.x - p.x;
    const double ny = q.y - p.y;
    const double mx = 0.5 * (p.x + q.x);
    const double my = 0.5 * (p.y + q.y);
    auto side = [&](const Point2& v) { return nx * (v.x - mx) + ny * (v.y - my); };
    next.clear();
    for (std::size_t i = 0, n = cell.size(); i < n; ++i) {
      const Point2& a = cell[i];
      const Point2& b = cell[(i + 1) % n];
      const double sa = side(a);
      const double sb = side(b);
      if (sa <= 0.0) next.push_back(a);
      if ((sa < 0.0 && sb > 0.0) || (sa > 0.0 && sb < 0.0)) {
        const double t = sa / (sa - sb);
        next.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
      }
    }
    cell.swap(next);
  }
  return cell;
}

std::vector<double> VoronoiCellAreas(const Triangulation& tri) {
  std::vector<double> areas(tri.points.size(), 0.0);
  for (std::size_t i = 0; i < tri.points.size(); ++i) {
    if (tri.representative[i] != i) continue;
    areas[i] = PolygonArea(ClippedVoronoiCell(tri, i));
  }
  for (std::size_t i = 0; i < tri.points.size(); ++i) {
    areas[i] = areas[tri.representative[i]];
  }
  return areas;
}

std::string TriangulationToJson(const Triangulation& tri) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const Point2& p : tri.points) pts.push_back({p.x, p.y});
  doc["points"] = std::move(pts);
  doc["triangles"] = tri.triangles;
  doc["hull"] = tri.hull;
  return doc.dump(1) + "\n";
}

}  // namespace itclust
