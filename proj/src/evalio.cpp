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

#include "itclust/evalio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "itclust/errors.hpp"

namespace itclust {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == ';';
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseNumber(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw ParseError(line, "not a finite number: '" + std::string(token) + "'");
  }
  return value;
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    fn(line_no, line);
  }
}

std::string ShortestRepr(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
}

Dataset ParsePoints(std::string_view text, const LoadOptions& options) {
  Dataset data;
  std::vector<double> classes;
  std::size_t width = 0;
  bool header_pending = options.skip_header;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') return;
    if (header_pending) {
      header_pending = false;
      return;
    }
    const auto fields = SplitFields(trimmed);
    if (fields.size() != 2 && fields.size() != 3) {
      throw DimensionError(line_no, "expected 2 or 3 fields, got " +
                                        std::to_string(fields.size()));
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      throw DimensionError(line_no, "expected " + std::to_string(width) +
                                        " fields, got " +
                                        std::to_string(fields.size()));
    }
    data.points.push_back(
        {ParseNumber(fields[0], line_no), ParseNumber(fields[1], line_no)});
    if (width == 3) classes.push_back(ParseNumber(fields[2], line_no));
  });
  if (width == 3) {
    std::vector<double> distinct = classes;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    GroundTruth gt;
    gt.reserve(classes.size());
    for (double c : classes) {
      gt.push_back(static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), c) -
          distinct.begin()));
    }
    data.ground_truth = std::move(gt);
  }
  return data;
}

Dataset LoadPoints(const std::filesystem::path& path,
                   const LoadOptions& options) {
  const std::string text = ReadFile(path);
  try {
    return ParsePoints(text, options);
  } catch (const DimensionError& e) {
    throw DimensionError(e.line(), path.string(), e.detail());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string(), e.detail());
  }
}

std::string FormatPoints(const Dataset& data) {
  std::string out;
  for (std::size_t i = 0; i < data.points.size(); ++i) {
    out += ShortestRepr(data.points[i].x);
    out += '\t';
    out += ShortestRepr(data.points[i].y);
    if (data.ground_truth) {
      out += '\t';
      out += std::to_string((*data.ground_truth)[i]);
    }
    out += '\n';
  }
  return out;
}

void SavePoints(const std::filesystem::path& path, const Dataset& data) {
  WriteFile(path, FormatPoints(data));
}

LabelSet ParseLabels(std::string_view text) {
  LabelSet labels;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') return;
    const auto comma = trimmed.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(line_no, "expected 'index,label'");
    }
    const std::string_view index_text = Trim(trimmed.substr(0, comma));
    const std::string_view label = Trim(trimmed.substr(comma + 1));
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(
        index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc() || ptr != index_text.data() + index_text.size()) {
      throw ParseError(line_no, "bad index '" + std::string(index_text) + "'");
    }
    if (label.empty()) throw ParseError(line_no, "empty label");
    if (!labels.emplace(index, std::string(label)).second) {
      throw DuplicateIndex(line_no, "index " + std::to_string(index) +
                                        " labelled twice");
    }
  });
  return labels;
}

LabelSet LoadLabels(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseLabels(text);
  } catch (const DuplicateIndex& e) {
    throw DuplicateIndex(e.line(), path.string(), e.detail());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string(), e.detail());
  }
}

std::string FormatLabels(const LabelSet& labels) {
  std::string out;
  for (const auto& [index, label] : labels) {
    out += std::to_string(index) + "," + label + "\n";
  }
  return out;
}

void SaveLabels(const std::filesystem::path& path, const LabelSet& labels) {
  WriteFile(path, FormatLabels(labels));
}

LabelSet SampleLabels(std::span<const std::size_t> ground_truth,
                      std::size_t per_cluster, std::uint64_t seed) {
  if (per_cluster == 0) throw InputError("per_cluster must be at least 1");
  std::size_t k = 0;
  for (std::size_t c : ground_truth) k = std::max(k, c + 1);
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < ground_truth.size(); ++i) {
    members[ground_truth[i]].push_back(i);
  }
  // mt19937_64's output sequence is fixed by the standard; the bounded draw
  // is done by hand because distributions are implementation-defined.
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t bound) {
    const std::uint64_t limit = rng.max() - rng.max() % bound;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    return r % bound;
  };
  LabelSet labels;
  for (std::size_t c = 0; c < k; ++c) {
    auto& pool = members[c];
    if (pool.size() < per_cluster) {
      throw ClusterTooSmall("class " + std::to_string(c) + " has " +
                            std::to_string(pool.size()) + " points, need " +
                            std::to_string(per_cluster));
    }
    for (std::size_t d = 0; d < per_cluster; ++d) {
      const std::size_t pick = d + below(pool.size() - d);
      std::swap(pool[d], pool[pick]);
      labels.emplace(pool[d], std::to_string(c));
    }
  }
  return labels;
}

namespace {

struct Contingency {
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> cells;
  std::map<std::size_t, std::int64_t> rows;
  std::map<std::size_t, std::int64_t> cols;
};

Contingency Tabulate(std::span<const std::size_t> found,
                     std::span<const std::size_t> truth) {
  if (found.size() != truth.size()) {
    throw LengthMismatch("assignment has " + std::to_string(found.size()) +
                         " entries, ground truth " +
                         std::to_string(truth.size()));
  }
  Contingency t;
  for (std::size_t i = 0; i < found.size(); ++i) {
    ++t.cells[{found[i], truth[i]}];
    ++t.rows[found[i]];
    ++t.cols[truth[i]];
  }
  return t;
}

__int128 Pairs(std::int64_t n) { return static_cast<__int128>(n) * (n - 1) / 2; }

double Ratio(__int128 num, __int128 den) {
  constexpr __int128 kExact = __int128{1} << 53;
  if (num < kExact && -num < kExact && den < kExact && -den < kExact) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

}  // namespace

double Purity(std::span<const std::size_t> found,
              std::span<const std::size_t> truth) {
  const Contingency t = Tabulate(found, truth);
  if (found.empty()) return 1.0;
  std::map<std::size_t, std::int64_t> best;
  for (const auto& [cell, count] : t.cells) {
    best[cell.first] = std::max(best[cell.first], count);
  }
  std::int64_t total = 0;
  for (const auto& [row, count] : best) total += count;
  return static_cast<double>(total) / static_cast<double>(found.size());
}

double AdjustedRandIndex(std::span<const std::size_t> found,
                         std::span<const std::size_t> truth) {
  const Contingency t = Tabulate(found, truth);
  const __int128 total = Pairs(static_cast<std::int64_t>(found.size()));
  __int128 index = 0, rows = 0, cols = 0;
  for (const auto& [cell, count] : t.cells) index += Pairs(count);
  for (const auto& [row, count] : t.rows) rows += Pairs(count);
  for (const auto& [col, count] : t.cols) cols += Pairs(count);
  // (index - E[index]) / (max - E[index]) with the N^-1 factors cleared.
  const __int128 num = 2 * (total * index - rows * cols);
  const __int128 den = total * (rows + cols) - 2 * rows * cols;
  if (den == 0) return 1.0;
  return Ratio(num, den);
}

MetricReport ComputeMetrics(const ClusterAssignment& assignment,
                            std::span<const std::size_t> truth) {
  MetricReport report;
  report.purity = Purity(assignment.cluster_id, truth);
  report.ari = AdjustedRandIndex(assignment.cluster_id, truth);
  report.k_found = assignment.k;
  std::size_t k = 0;
  for (std::size_t c : truth) k = std::max(k, c + 1);
  report.k_true = k;
  return report;
}

std::string MetricReportToJson(const MetricReport& report) {
  nlohmann::ordered_json doc;
  doc["purity"] = report.purity;
  doc["ari"] = report.ari;
  doc["k_found"] = report.k_found;
  doc["k_true"] = report.k_true;
  return doc.dump(2) + "\n";
}

std::string FormatClusters(const ClusterAssignment& assignment) {
  std::string out;
  for (std::size_t i = 0; i < assignment.cluster_id.size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(assignment.cluster_id[i]) +
           "\n";
  }
  return out;
}

ClusterAssignment ParseClusters(std::string_view text) {
  ClusterAssignment out;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') return;
    const auto fields = SplitFields(trimmed);
    if (fields.size() != 2) throw DimensionError(line_no, "expected 'index,cluster_id'");
    std::size_t values[2];
    for (int f = 0; f < 2; ++f) {
      const auto [ptr, ec] = std::from_chars(
          fields[f].data(), fields[f].data() + fields[f].size(), values[f]);
      if (ec != std::errc() || ptr != fields[f].data() + fields[f].size()) {
        throw ParseError(line_no, "bad integer '" + std::string(fields[f]) + "'");
      }
    }
    if (values[0] != out.cluster_id.size()) {
      throw ParseError(line_no, "expected index " +
                                    std::to_string(out.cluster_id.size()));
    }
    out.cluster_id.push_back(values[1]);
  });
  std::map<std::size_t, std::size_t> first_node;
  for (std::size_t i = 0; i < out.cluster_id.size(); ++i) {
    first_node.emplace(out.cluster_id[i], i);
  }
  out.k = first_node.size();
  // Roots are unknown in a clusters file; report each cluster's first node.
  for (const auto& [id, node] : first_node) out.roots.push_back(node);
  return out;
}

}  // namespace itclust
