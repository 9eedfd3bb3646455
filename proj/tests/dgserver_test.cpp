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

#include "itclust/dgserver.hpp"

#include <httplib.h>

#include <gtest/gtest.h>

#include <atomic>
#include <nlohmann/json.hpp>
#include <set>
#include <thread>

#include "itclust/errors.hpp"
#include "itclust/evalio.hpp"
#include "test_support.hpp"

namespace itclust {
namespace {

using Json = nlohmann::json;

const std::vector<Point2> kFixture{{0, 0}, {1, 0}, {2, 0}};

DgSession FixtureSession() {
  return DgSession(kFixture, BuildInTree(kFixture, std::vector<double>{3, 1, 2}));
}

Json Golden(const std::string& name) {
  return Json::parse(ReadFile(testing::GoldenDir() / name));
}

TEST(DgSession, StateMatchesGolden) {
  DgSession s = FixtureSession();
  EXPECT_EQ(Json::parse(s.StateJson()), Golden("fixture3_state.json"));
  EXPECT_EQ(s.StateJson(), s.StateJson());
}

TEST(DgSession, DecisionGraphMatchesGolden) {
  DgSession s = FixtureSession();
  EXPECT_EQ(Json::parse(s.DecisionGraphJson()), Golden("fixture3_decision_graph.json"));
  DgSession single({{4, 4}}, BuildInTree(std::vector<Point2>{{4, 4}}, std::vector<double>{1}));
  EXPECT_EQ(Json::parse(single.DecisionGraphJson()), Json::array());
}

TEST(DgSession, DecisionGraphHasNMinusOneEntries) {
  const auto pts = testing::RandomPoints(77, 1);
  std::vector<double> p(pts.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = pts[i].x * pts[i].y;
  DgSession s(pts, BuildInTree(pts, p));
  EXPECT_EQ(Json::parse(s.DecisionGraphJson()).size(), 76u);
}

TEST(DgSession, PostCuts) {
  DgSession s = FixtureSession();
  HttpReply r = s.PostCuts(R"({"cut_nodes":[]})");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(Json::parse(r.body)["k"], 1);

  r = s.PostCuts(R"({"cut_nodes":[2]})");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(Json::parse(r.body), Golden("fixture3_cut2.json"));
  EXPECT_EQ(s.CurrentCutsJson(), r.body);
  EXPECT_EQ(s.PostCuts(R"({"cut_nodes":[2]})").body, r.body);  // idempotent
}

TEST(DgSession, InvalidCutsLeaveStateUnchanged) {
  DgSession s = FixtureSession();
  const std::string before = s.PostCuts(R"({"cut_nodes":[2]})").body;
  for (const char* body : {R"({"cut_nodes":[1]})", R"({"cut_nodes":[3]})",
                           R"({"cut_nodes":[-1]})", R"({"cut_nodes":[2,2]})"}) {
    const HttpReply r = s.PostCuts(body);
    EXPECT_EQ(r.status, 422) << body;
    EXPECT_TRUE(Json::parse(r.body).contains("node")) << body;
    EXPECT_EQ(s.CurrentCutsJson(), before);
  }
  EXPECT_EQ(Json::parse(s.PostCuts(R"({"cut_nodes":[1]})").body)["node"], 1);
  for (const char* body : {"", "nope", "[]", R"({"cut_nodes":"2"})", R"({"cut_nodes":[0.5]})"}) {
    EXPECT_EQ(s.PostCuts(body).status, 400) << body;
  }
  EXPECT_EQ(s.CurrentCutsJson(), before);
}

TEST(DgSession, RejectsCutTreeAndMismatch) {
  InTree tree = BuildInTree(kFixture, std::vector<double>{3, 1, 2});
  EXPECT_THROW(DgSession({{0, 0}}, tree), LengthMismatch);
  tree.cut_flags[2] = true;
  EXPECT_THROW(DgSession(kFixture, tree), CutterError);
}

TEST(DgSession, ConcurrentReadsSeeWholeSnapshots) {
  DgSession s = FixtureSession();
  const std::string a = s.PostCuts(R"({"cut_nodes":[]})").body;
  const std::string b = R"({"k":3,"cluster_id":[0,1,2],"roots":[0,1,2]})";
  std::atomic<bool> done{false};
  std::thread writer([&] {
    for (int i = 0; i < 2000; ++i) {
      s.PostCuts(i % 2 ? R"({"cut_nodes":[]})" : R"({"cut_nodes":[0,2]})");
    }
    done = true;
  });
  std::set<std::string> seen;
  while (!done) seen.insert(s.CurrentCutsJson());
  writer.join();
  for (const std::string& body : seen) {
    EXPECT_TRUE(body == a || Json::parse(body) == Json::parse(b)) << body;
  }
}

TEST(DgServer, ServesOverLoopback) {
  DgSession s = FixtureSession();
  httplib::Server server;
  MountRoutes(server, s, std::nullopt);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto state = client.Get("/api/state");
  ASSERT_TRUE(state);
  EXPECT_EQ(state->status, 200);
  EXPECT_EQ(Json::parse(state->body), Golden("fixture3_state.json"));

  auto graph = client.Get("/api/decision-graph");
  ASSERT_TRUE(graph);
  EXPECT_EQ(Json::parse(graph->body), Golden("fixture3_decision_graph.json"));

  auto cut = client.Post("/api/cuts", R"({"cut_nodes":[2]})", "application/json");
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->status, 200);
  EXPECT_EQ(Json::parse(cut->body), Golden("fixture3_cut2.json"));

  auto bad = client.Post("/api/cuts", R"({"cut_nodes":[1]})", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 422);
  auto current = client.Get("/api/cuts");
  ASSERT_TRUE(current);
  EXPECT_EQ(Json::parse(current->body), Golden("fixture3_cut2.json"));

  server.stop();
  thread.join();
}

}  // namespace
}  // namespace itclust
