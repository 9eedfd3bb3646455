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

#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "itclust/geometry2d.hpp"

namespace itclust::testing {

inline std::vector<Point2> RandomPoints(std::size_t n, std::uint64_t seed,
                                        double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, scale);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

// Coordinates on a coarse grid, so collinear and cocircular subsets are common.
inline std::vector<Point2> GridPoints(std::size_t n, std::uint64_t seed,
                                      int cells = 6) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(0, cells);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {static_cast<double>(u(rng)), static_cast<double>(u(rng))};
  return pts;
}

inline std::filesystem::path SourceDir() { return ITCLUST_SOURCE_DIR; }
inline std::filesystem::path GoldenDir() { return ITCLUST_GOLDEN_DIR; }

}  // namespace itclust::testing
