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

#include <gtest/gtest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

namespace itclust::predicates {
namespace {

using Rational = boost::multiprecision::cpp_rational;

int Sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int OrientOracle(double ax, double ay, double bx, double by, double cx,
                 double cy) {
  const Rational acx = Rational(ax) - Rational(cx);
  const Rational acy = Rational(ay) - Rational(cy);
  const Rational bcx = Rational(bx) - Rational(cx);
  const Rational bcy = Rational(by) - Rational(cy);
  return Sign(acx * bcy - acy * bcx);
}

int IncircleOracle(double ax, double ay, double bx, double by, double cx,
                   double cy, double dx, double dy) {
  const Rational adx = Rational(ax) - Rational(dx), ady = Rational(ay) - Rational(dy);
  const Rational bdx = Rational(bx) - Rational(dx), bdy = Rational(by) - Rational(dy);
  const Rational cdx = Rational(cx) - Rational(dx), cdy = Rational(cy) - Rational(dy);
  const Rational alift = adx * adx + ady * ady;
  const Rational blift = bdx * bdx + bdy * bdy;
  const Rational clift = cdx * cdx + cdy * cdy;
  return Sign(alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
              clift * (adx * bdy - bdx * ady));
}

TEST(Orient2d, BasicSigns) {
  EXPECT_EQ(orient2d(0, 0, 1, 0, 0, 1), 1);
  EXPECT_EQ(orient2d(0, 0, 0, 1, 1, 0), -1);
  EXPECT_EQ(orient2d(0, 0, 1, 1, 2, 2), 0);
}

TEST(Orient2d, NearlyCollinearMatchesRationalOracle) {
  // Points along y = x perturbed by single ulps defeat naive evaluation.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double t1 = u(rng), t2 = u(rng), t3 = u(rng);
    double ax = t1, ay = t1, bx = t2 * 1e3, by = t2 * 1e3, cx = t3, cy = t3;
    const int wiggle = static_cast<int>(rng() % 5) - 2;
    for (int w = 0; w < std::abs(wiggle); ++w) {
      cy = std::nextafter(cy, wiggle > 0 ? 2.0 : -2.0);
    }
    EXPECT_EQ(orient2d(ax, ay, bx, by, cx, cy), OrientOracle(ax, ay, bx, by, cx, cy))
        << "trial " << trial;
  }
}

TEST(Incircle, BasicSigns) {
  EXPECT_EQ(incircle(0, 0, 1, 0, 0, 1, 0.2, 0.2), 1);
  EXPECT_EQ(incircle(0, 0, 1, 0, 0, 1, 5, 5), -1);
  EXPECT_EQ(incircle(0, 0, 1, 0, 1, 1, 0, 1), 0);
}

TEST(Incircle, NearlyCocircularMatchesRationalOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int trial = 0; trial < 2000; ++trial) {
    double c[4][2];
    for (auto& p : c) {
      const double a = angle(rng);
      p[0] = 10.0 + 3.0 * std::cos(a);
      p[1] = -4.0 + 3.0 * std::sin(a);
    }
    if (OrientOracle(c[0][0], c[0][1], c[1][0], c[1][1], c[2][0], c[2][1]) < 0) {
      std::swap(c[1], c[2]);
    }
    EXPECT_EQ(incircle(c[0][0], c[0][1], c[1][0], c[1][1], c[2][0], c[2][1],
                       c[3][0], c[3][1]),
              IncircleOracle(c[0][0], c[0][1], c[1][0], c[1][1], c[2][0],
                             c[2][1], c[3][0], c[3][1]))
        << "trial " << trial;
  }
}

TEST(IncirclePerturbed, AgreesWithExactWhenNonZero) {
  EXPECT_EQ(incircle_perturbed(0, 0, 0, 1, 0, 1, 0, 1, 2, 0.2, 0.2, 3), 1);
  EXPECT_EQ(incircle_perturbed(0, 0, 0, 1, 0, 1, 0, 1, 2, 5, 5, 3), -1);
}

TEST(IncirclePerturbed, CocircularSquareIsResolvedConsistently) {
  // Unit square corners 0..3. Diagonal 0-2 survives iff 3 is outside (0,1,2)
  // and 1 is outside (0,2,3); diagonal 1-3 iff 0 is outside (1,2,3) and 2 is
  // outside (0,1,3). Exactly one of the two may hold.
  const double x[4] = {0, 1, 1, 0};
  const double y[4] = {0, 0, 1, 1};
  auto s = [&](int a, int b, int c, int d) {
    return incircle_perturbed(x[a], y[a], a, x[b], y[b], b, x[c], y[c], c, x[d], y[d], d);
  };
  EXPECT_NE(s(0, 1, 2, 3), 0);
  EXPECT_EQ(s(0, 1, 2, 3), s(0, 2, 3, 1));
  EXPECT_EQ(s(1, 2, 3, 0), s(0, 1, 3, 2));
  EXPECT_EQ(s(0, 1, 2, 3), -s(1, 2, 3, 0));
}

TEST(IncirclePerturbed, InvariantUnderCyclicRotation) {
  std::mt19937_64 rng(5);
  // Integer points on a circle of radius 5 are exactly cocircular.
  const double pts[][2] = {{5, 0}, {4, 3}, {3, 4}, {0, 5}, {-3, 4}, {-4, 3},
                           {-5, 0}, {-4, -3}, {-3, -4}, {0, -5}, {3, -4}, {4, -3}};
  for (int trial = 0; trial < 200; ++trial) {
    long k[4];
    for (int i = 0; i < 4; ++i) {
      k[i] = static_cast<long>(rng() % 12);
      for (int j = 0; j < i; ++j) {
        if (k[j] == k[i]) {
          --i;
          break;
        }
      }
    }
    std::sort(k, k + 3, [&](long l, long r) {
      return std::atan2(pts[l][1], pts[l][0]) < std::atan2(pts[r][1], pts[r][0]);
    });
    auto s = [&](long a, long b, long c, long d) {
      return incircle_perturbed(pts[a][0], pts[a][1], a, pts[b][0], pts[b][1], b,
                                pts[c][0], pts[c][1], c, pts[d][0], pts[d][1], d);
    };
    const int base = s(k[0], k[1], k[2], k[3]);
    EXPECT_NE(base, 0);
    EXPECT_EQ(base, s(k[1], k[2], k[0], k[3]));
    EXPECT_EQ(base, s(k[2], k[0], k[1], k[3]));
  }
}

}  // namespace
}  // namespace itclust::predicates
