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

#include "itclust/predicates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace itclust::predicates {
namespace {

constexpr double kEpsilon = 0x1p-53;
constexpr double kOrientBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIncircleBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

// Nonoverlapping expansion with components sorted by increasing magnitude
// and zeros eliminated. The represented value is the exact sum.
class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(double v) {
    if (v != 0.0) terms_.push_back(v);
  }

  static Expansion Difference(double a, double b) {
    const double x = a - b;
    const double bv = a - x;
    const double av = x + bv;
    const double br = bv - b;
    const double ar = a - av;
    Expansion e;
    e.Push(ar + br);
    e.Push(x);
    return e;
  }

  Expansion operator+(const Expansion& other) const {
    Expansion sum = *this;
    for (double t : other.terms_) sum = sum.Grow(t);
    return sum;
  }

  Expansion operator-() const {
    Expansion neg = *this;
    for (double& t : neg.terms_) t = -t;
    return neg;
  }

  Expansion operator-(const Expansion& other) const { return *this + (-other); }

  Expansion operator*(const Expansion& other) const {
    Expansion product;
    for (double t : other.terms_) product = product + Scale(t);
    return product;
  }

  int Sign() const {
    if (terms_.empty()) return 0;
    return terms_.back() > 0.0 ? 1 : -1;
  }

 private:
  void Push(double v) {
    if (v != 0.0) terms_.push_back(v);
  }

  static void TwoSum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    y = (a - av) + (b - bv);
  }

  static void FastTwoSum(double a, double b, double& x, double& y) {
    x = a + b;
    y = b - (x - a);
  }

  static void TwoProduct(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
  }

  Expansion Grow(double b) const {
    Expansion h;
    double q = b;
    for (double e : terms_) {
      double sum, err;
      TwoSum(q, e, sum, err);
      h.Push(err);
      q = sum;
    }
    h.Push(q);
    return h;
  }

  Expansion Scale(double b) const {
    Expansion h;
    if (terms_.empty() || b == 0.0) return h;
    double q, low;
    TwoProduct(terms_[0], b, q, low);
    h.Push(low);
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      double hi, lo, sum, err;
      TwoProduct(terms_[i], b, hi, lo);
      TwoSum(q, lo, sum, err);
      h.Push(err);
      FastTwoSum(hi, sum, q, err);
      h.Push(err);
    }
    h.Push(q);
    return h;
  }

  std::vector<double> terms_;
};

int SignOf(double v) { return (v > 0.0) - (v < 0.0); }

int OrientExact(double ax, double ay, double bx, double by, double cx,
                double cy) {
  const Expansion acx = Expansion::Difference(ax, cx);
  const Expansion acy = Expansion::Difference(ay, cy);
  const Expansion bcx = Expansion::Difference(bx, cx);
  const Expansion bcy = Expansion::Difference(by, cy);
  return (acx * bcy - acy * bcx).Sign();
}

int IncircleExact(double ax, double ay, double bx, double by, double cx,
                  double cy, double dx, double dy) {
  const Expansion adx = Expansion::Difference(ax, dx);
  const Expansion ady = Expansion::Difference(ay, dy);
  const Expansion bdx = Expansion::Difference(bx, dx);
  const Expansion bdy = Expansion::Difference(by, dy);
  const Expansion cdx = Expansion::Difference(cx, dx);
  const Expansion cdy = Expansion::Difference(cy, dy);
  const Expansion alift = adx * adx + ady * ady;
  const Expansion blift = bdx * bdx + bdy * bdy;
  const Expansion clift = cdx * cdx + cdy * cdy;
  const Expansion det = alift * (bdx * cdy - cdx * bdy) +
                        blift * (cdx * ady - adx * cdy) +
                        clift * (adx * bdy - bdx * ady);
  return det.Sign();
}

}  // namespace

int orient2d(double ax, double ay, double bx, double by, double cx,
             double cy) {
  const double left = (ax - cx) * (by - cy);
  const double right = (ay - cy) * (bx - cx);
  const double det = left - right;
  const double bound = kOrientBound * (std::abs(left) + std::abs(right));
  if (det > bound || -det > bound) return SignOf(det);
  return OrientExact(ax, ay, bx, by, cx, cy);
}

int incircle(double ax, double ay, double bx, double by, double cx, double cy,
             double dx, double dy) {
  const double adx = ax - dx, ady = ay - dy;
  const double bdx = bx - dx, bdy = by - dy;
  const double cdx = cx - dx, cdy = cy - dy;
  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent =
      (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
      (std::abs(cdxady) + std::abs(adxcdy)) * blift +
      (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double bound = kIncircleBound * permanent;
  if (det > bound || -det > bound) return SignOf(det);
  return IncircleExact(ax, ay, bx, by, cx, cy, dx, dy);
}

int incircle_perturbed(double ax, double ay, long ka, double bx, double by,
                       long kb, double cx, double cy, long kc, double dx,
                       double dy, long kd) {
  const int exact = incircle(ax, ay, bx, by, cx, cy, dx, dy);
  if (exact != 0) return exact;

  // The determinant is linear in each lifted coordinate; the coefficient of
  // z_k is the signed orientation of the other three points.
  struct Term {
    long key;
    int coefficient;
  };
  std::array<Term, 4> terms{{
      {ka, orient2d(bx, by, cx, cy, dx, dy)},
      {kb, -orient2d(ax, ay, cx, cy, dx, dy)},
      {kc, orient2d(ax, ay, bx, by, dx, dy)},
      {kd, -orient2d(ax, ay, bx, by, cx, cy)},
  }};
  std::sort(terms.begin(), terms.end(),
            [](const Term& l, const Term& r) { return l.key < r.key; });
  for (const Term& t : terms) {
    if (t.coefficient != 0) return t.coefficient;
  }
  return 0;
}

}  // namespace itclust::predicates
