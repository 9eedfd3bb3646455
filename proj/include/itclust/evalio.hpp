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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "itclust/cutting.hpp"
#include "itclust/geometry2d.hpp"
#include "itclust/intree.hpp"

namespace itclust {

/// Complete per-point class ids, dense from 0.
using GroundTruth = std::vector<std::size_t>;

struct Dataset {
  std::vector<Point2> points;
  std::optional<GroundTruth> ground_truth;
};

struct LoadOptions {
  bool skip_header = false;
};

/// Rows of "x y" or "x y class", separated by commas and/or whitespace.
/// Blank lines and lines starting with '#' are ignored. Classes are
/// densified in increasing numeric order.
Dataset ParsePoints(std::string_view text, const LoadOptions& options = {});
Dataset LoadPoints(const std::filesystem::path& path,
                   const LoadOptions& options = {});
/// Tab-separated, shortest round-trip formatting.
std::string FormatPoints(const Dataset& data);
void SavePoints(const std::filesystem::path& path, const Dataset& data);

/// Rows of "index,label".
LabelSet ParseLabels(std::string_view text);
LabelSet LoadLabels(const std::filesystem::path& path);
std::string FormatLabels(const LabelSet& labels);
void SaveLabels(const std::filesystem::path& path, const LabelSet& labels);

/// Draws `per_cluster` distinct members of every true cluster. Labels are
/// the decimal class ids. Throws ClusterTooSmall.
LabelSet SampleLabels(std::span<const std::size_t> ground_truth,
                      std::size_t per_cluster, std::uint64_t seed);

struct MetricReport {
  double purity = 0.0;
  double ari = 0.0;
  std::size_t k_found = 0;
  std::size_t k_true = 0;
};

double Purity(std::span<const std::size_t> found,
              std::span<const std::size_t> truth);
double AdjustedRandIndex(std::span<const std::size_t> found,
                         std::span<const std::size_t> truth);
MetricReport ComputeMetrics(const ClusterAssignment& assignment,
                            std::span<const std::size_t> truth);
std::string MetricReportToJson(const MetricReport& report);

/// "index,cluster_id" per line.
std::string FormatClusters(const ClusterAssignment& assignment);
/// Inverse of FormatClusters; rows must cover 0..n-1 in order.
ClusterAssignment ParseClusters(std::string_view text);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace itclust
