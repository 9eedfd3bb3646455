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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

#include "itclust/evalio.hpp"
#include "test_support.hpp"

namespace itclust {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("itclust_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with `args`, returning its exit status.
  static int Run(const std::string& args) {
    const std::string command = std::string(ITCLUST_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Data(const std::string& name) {
    return (testing::SourceDir() / "data" / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, MissingPointsFileIsInputError) {
  EXPECT_EQ(Run("run --points " + (dir_ / "absent.txt").string() + " --out-dir " + dir_.string()),
            2);
}

TEST_F(CliTest, ExitCodesByCategory) {
  WriteFile(dir_ / "line.txt", "0 0\n1 0\n2 0\n");
  EXPECT_EQ(Run("run --points " + (dir_ / "line.txt").string() + " --cut dg-auto 2 --out-dir " +
                dir_.string()),
            3);
  EXPECT_EQ(Run("run --points " + (dir_ / "line.txt").string() +
                " --sdef median --complete-graph-fallback --cut dg-auto 2 --out-dir " +
                dir_.string()),
            0);
  WriteFile(dir_ / "tri.txt", "0 0\n1 0\n0 1\n");
  EXPECT_EQ(Run("run --points " + (dir_ / "tri.txt").string() + " --cut dg-auto 4 --out-dir " +
                dir_.string()),
            4);
  WriteFile(dir_ / "bad.txt", "0 0\n1 x\n");
  EXPECT_EQ(Run("triangulate --points " + (dir_ / "bad.txt").string()), 2);
  EXPECT_NE(Run("run --points " + (dir_ / "tri.txt").string() + " --sdef cube"), 0);
}

TEST_F(CliTest, DgAutoFindsRequestedClusterCount) {
  ASSERT_EQ(Run("run --points " + Data("aggregation.txt") + " --cut dg-auto 7 --out-dir " +
                dir_.string()),
            0);
  const auto report = nlohmann::json::parse(ReadFile(dir_ / "report.json"));
  EXPECT_EQ(report["k_found"], 7);
  EXPECT_EQ(report["k_true"], 7);
  EXPECT_EQ(ParseClusters(ReadFile(dir_ / "clusters.csv")).k, 7u);
  EXPECT_TRUE(fs::exists(dir_ / "tree.json"));
}

TEST_F(CliTest, StagedCommandsMatchRun) {
  const std::string points = Data("flame.txt");
  const fs::path run_dir = dir_ / "run";
  ASSERT_EQ(Run("run --points " + points + " --sdef median --cut ss --sample-labels 1 --seed 3 "
                "--out-dir " + run_dir.string()),
            0);
  const fs::path tree = dir_ / "tree.json";
  const fs::path clusters = dir_ / "clusters.csv";
  const fs::path report = dir_ / "report.json";
  ASSERT_EQ(Run("tree --points " + points + " --sdef median --out " + tree.string()), 0);
  ASSERT_EQ(Run("cut --tree " + tree.string() + " --points " + points +
                " --cut ss --sample-labels 1 --seed 3 --out " + clusters.string()),
            0);
  ASSERT_EQ(Run("eval --points " + points + " --clusters " + clusters.string() + " --out " +
                report.string()),
            0);
  EXPECT_EQ(ReadFile(clusters), ReadFile(run_dir / "clusters.csv"));
  EXPECT_EQ(ReadFile(report), ReadFile(run_dir / "report.json"));

  const fs::path potential = dir_ / "potential.json";
  const fs::path tree2 = dir_ / "tree2.json";
  ASSERT_EQ(Run("potential --points " + points + " --sdef median --out " + potential.string()), 0);
  ASSERT_EQ(Run("tree --points " + points + " --potential " + potential.string() + " --out " +
                tree2.string()),
            0);
  EXPECT_EQ(ReadFile(tree2), ReadFile(tree));
}

TEST_F(CliTest, ManualCutsMatchAutoCuts) {
  const std::string points = Data("flame.txt");
  ASSERT_EQ(Run("run --points " + points + " --cut dg-auto 2 --out-dir " + (dir_ / "a").string()),
            0);
  const auto clusters = ParseClusters(ReadFile(dir_ / "a" / "clusters.csv"));
  ASSERT_EQ(clusters.roots.size(), 2u);
  // The non-global root is the node whose edge was cut.
  std::string nodes;
  const std::string tree_text = ReadFile(dir_ / "a" / "tree.json");
  const auto tree = nlohmann::json::parse(tree_text);
  for (std::size_t i = 0; i < tree["cut_flags"].size(); ++i) {
    if (tree["cut_flags"][i].get<bool>()) nodes += (nodes.empty() ? "" : ",") + std::to_string(i);
  }
  ASSERT_FALSE(nodes.empty());
  ASSERT_EQ(Run("run --points " + points + " --cut dg-manual --nodes " + nodes + " --out-dir " +
                (dir_ / "m").string()),
            0);
  EXPECT_EQ(ReadFile(dir_ / "m" / "clusters.csv"), ReadFile(dir_ / "a" / "clusters.csv"));
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const std::string args = "run --points " + Data("spiral.txt") +
                           " --cut ss --sample-labels 2 --seed 9 --svg clusters decision_graph "
                           "delaunay_potential it_potential --out-dir ";
  ASSERT_EQ(Run(args + (dir_ / "one").string()), 0);
  ASSERT_EQ(Run(args + (dir_ / "two").string()), 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "one")) {
    const fs::path name = entry.path().filename();
    EXPECT_EQ(ReadFile(entry.path()), ReadFile(dir_ / "two" / name)) << name;
    ++files;
  }
  EXPECT_EQ(files, 7u);
  const std::string svg = ReadFile(dir_ / "one" / "clusters.svg");
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST_F(CliTest, TriangulateWritesDocument) {
  const fs::path out = dir_ / "tri.json";
  WriteFile(dir_ / "pts.txt", "0,0\n1,0\n0,1\n");
  ASSERT_EQ(Run("triangulate --points " + (dir_ / "pts.txt").string() + " --out " + out.string()),
            0);
  const auto doc = nlohmann::json::parse(ReadFile(out));
  EXPECT_EQ(doc["triangles"].size(), 1u);
}

}  // namespace
}  // namespace itclust
