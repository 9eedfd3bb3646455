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

#include <cstdint>
#include <nlohmann/json.hpp>

#include "itclust/errors.hpp"

namespace itclust {
namespace {

using Json = nlohmann::ordered_json;

std::string CutResponse(const CutResult& cut) {
  Json doc;
  doc["k"] = cut.assignment.k;
  doc["cluster_id"] = cut.assignment.cluster_id;
  doc["roots"] = cut.assignment.roots;
  return doc.dump();
}

std::string ErrorBody(const std::string& message,
                      std::optional<std::int64_t> node = std::nullopt) {
  Json doc;
  doc["error"] = message;
  if (node) doc["node"] = *node;
  return doc.dump();
}

std::string BuildState(const std::vector<Point2>& points, const InTree& tree) {
  Json doc;
  Json pts = Json::array();
  for (const Point2& p : points) pts.push_back({p.x, p.y});
  doc["points"] = std::move(pts);
  doc["potential"] = tree.potential;
  doc["parent"] = tree.parent;
  doc["edge_length"] = tree.edge_length;
  return doc.dump();
}

std::string DecisionGraphDocument(const InTree& tree) {
  Json doc = Json::array();
  for (const auto& e : itclust::BuildDecisionGraph(tree)) {
    doc.push_back({{"node", e.node}, {"p", e.p}, {"w", e.w}});
  }
  return doc.dump();
}

}  // namespace

DgSession::DgSession(std::vector<Point2> points, InTree tree)
    : points_(std::move(points)),
      tree_(std::move(tree)),
      state_json_(BuildState(points_, tree_)),
      decision_graph_json_(DecisionGraphDocument(tree_)),
      current_(std::make_shared<const std::string>(
          CutResponse(DecisionGraphManualCut(tree_, {})))) {
  if (points_.size() != tree_.size()) {
    throw LengthMismatch("points and in-tree differ in length");
  }
}

std::string DgSession::StateJson() const { return state_json_; }

std::string DgSession::DecisionGraphJson() const { return decision_graph_json_; }

std::string DgSession::CurrentCutsJson() const {
  std::lock_guard lock(mutex_);
  return *current_;
}

HttpReply DgSession::PostCuts(std::string_view body) {
  Json doc;
  try {
    doc = Json::parse(body);
  } catch (const Json::exception&) {
    return {400, ErrorBody("body is not JSON")};
  }
  if (!doc.is_object() || !doc.contains("cut_nodes") ||
      !doc["cut_nodes"].is_array()) {
    return {400, ErrorBody("expected {\"cut_nodes\": [...]}")};
  }
  std::vector<std::size_t> nodes;
  for (const Json& v : doc["cut_nodes"]) {
    if (!v.is_number_unsigned()) {
      if (v.is_number_integer()) {
        return {422, ErrorBody("negative cut node", v.get<std::int64_t>())};
      }
      return {400, ErrorBody("cut_nodes must hold indices")};
    }
    nodes.push_back(v.get<std::size_t>());
  }
  std::string response;
  try {
    response = CutResponse(DecisionGraphManualCut(tree_, nodes));
  } catch (const InvalidCutNode& e) {
    return {422, ErrorBody(e.what(), e.node())};
  }
  auto fresh = std::make_shared<const std::string>(response);
  {
    std::lock_guard lock(mutex_);
    current_ = std::move(fresh);
  }
  return {200, std::move(response)};
}

void MountRoutes(httplib::Server& server, DgSession& session,
                 const std::optional<std::filesystem::path>& static_dir) {
  constexpr const char* kJson = "application/json";
  server.Get("/api/state", [&session](const httplib::Request&, httplib::Response& res) {
    res.set_content(session.StateJson(), kJson);
  });
  server.Get("/api/decision-graph",
             [&session](const httplib::Request&, httplib::Response& res) {
               res.set_content(session.DecisionGraphJson(), kJson);
             });
  server.Get("/api/cuts", [&session](const httplib::Request&, httplib::Response& res) {
    res.set_content(session.CurrentCutsJson(), kJson);
  });
  server.Post("/api/cuts", [&session](const httplib::Request& req, httplib::Response& res) {
    const HttpReply reply = session.PostCuts(req.body);
    res.status = reply.status;
    res.set_content(reply.body, kJson);
  });
  if (static_dir && std::filesystem::is_directory(*static_dir)) {
    server.set_mount_point("/", static_dir->string());
  }
}

bool Serve(DgSession& session, int port,
           const std::optional<std::filesystem::path>& static_dir) {
  httplib::Server server;
  MountRoutes(server, session, static_dir);
  return server.listen("127.0.0.1", port);
}

}  // namespace itclust
