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

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itclust/cutting.hpp"
#include "itclust/geometry2d.hpp"
#include "itclust/intree.hpp"

namespace httplib {
class Server;
}

namespace itclust {

struct HttpReply {
  int status = 200;
  std::string body;
};

/// One dataset's interactive decision-graph session. The tree is fixed at
/// construction; POSTed cut sets replace the current cuts atomically.
class DgSession {
 public:
  /// `tree` must be fresh (no cuts).
  DgSession(std::vector<Point2> points, InTree tree);

  /// GET /api/state
  std::string StateJson() const;
  /// GET /api/decision-graph
  std::string DecisionGraphJson() const;
  /// GET /api/cuts: the response of the most recent successful POST.
  std::string CurrentCutsJson() const;
  /// POST /api/cuts with {"cut_nodes": [...]}. 422 on invalid nodes, 400 on
  /// malformed bodies; the current cuts are untouched on error.
  HttpReply PostCuts(std::string_view body);

 private:
  const std::vector<Point2> points_;
  const InTree tree_;
  const std::string state_json_;
  const std::string decision_graph_json_;

  mutable std::mutex mutex_;
  std::shared_ptr<const std::string> current_;
};

/// Registers the API routes and, when `static_dir` exists, serves its files
/// at "/".
void MountRoutes(httplib::Server& server, DgSession& session,
                 const std::optional<std::filesystem::path>& static_dir);

/// Blocks serving 127.0.0.1:`port` until the server is stopped.
bool Serve(DgSession& session, int port,
           const std::optional<std::filesystem::path>& static_dir);

}  // namespace itclust
