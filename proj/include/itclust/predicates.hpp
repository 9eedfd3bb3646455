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

// Exact geometric predicates on double coordinates.
//
// Each predicate first evaluates in floating point with a forward error
// bound and only falls back to exact expansion arithmetic when the sign is
// not certified. Inputs are assumed finite and far enough from the
// underflow range that products of coordinate differences are exact in
// two-term form.

namespace itclust::predicates {

/// Sign of the signed area of (a, b, c): +1 counter-clockwise, -1 clockwise,
/// 0 collinear.
int orient2d(double ax, double ay, double bx, double by, double cx, double cy);

/// Sign of the incircle determinant: +1 if d lies strictly inside the circle
/// through a, b, c (given counter-clockwise), -1 outside, 0 cocircular.
int incircle(double ax, double ay, double bx, double by, double cx, double cy,
             double dx, double dy);

/// Incircle under symbolic perturbation of the lifted coordinate
/// z = x^2 + y^2 of every point by eps^(rank), where rank is the point's
/// integer key. Smaller keys receive the dominant perturbation. Never returns
/// 0 for distinct keys and a non-degenerate triangle (a, b, c).
int incircle_perturbed(double ax, double ay, long ka, double bx, double by,
                       long kb, double cx, double cy, long kc, double dx,
                       double dy, long kd);

}  // namespace itclust::predicates
