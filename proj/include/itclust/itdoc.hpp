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

#include <string>
#include <string_view>

#include "itclust/cutting.hpp"
#include "itclust/intree.hpp"
#include "itclust/potential.hpp"

namespace itclust {

/// {"n": ..., "parent": [...], "potential": [...], "edge_length": [...],
///  "cut_flags": [...]}. Doubles are written in shortest round-trip form.
std::string InTreeToJson(const InTree& tree);

/// Throws SchemaError on malformed documents, length mismatches, out of
/// range parents and parent cycles.
InTree InTreeFromJson(std::string_view text);

/// {"sdef": ..., "transform": ..., "s": [...], "p": [...]}.
std::string PotentialToJson(const PotentialField& field);
PotentialField PotentialFromJson(std::string_view text);

}  // namespace itclust
