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

#include "itclust/itdoc.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "itclust/errors.hpp"

namespace itclust {
namespace {

using Json = nlohmann::ordered_json;

Json Parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("not a JSON document: ") + e.what());
  }
}

const Json& Field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw SchemaError(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

template <typename T>
std::vector<T> Array(const Json& doc, const char* name, std::size_t n) {
  const Json& a = Field(doc, name);
  if (!a.is_array()) throw SchemaError(std::string("'") + name + "' is not an array");
  if (a.size() != n) {
    throw SchemaError(std::string("'") + name + "' has " +
                      std::to_string(a.size()) + " entries, expected " +
                      std::to_string(n));
  }
  std::vector<T> out;
  out.reserve(n);
  for (const Json& v : a) {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw SchemaError(std::string("'") + name + "' holds a non-boolean");
      out.push_back(v.get<bool>());
    } else if constexpr (std::is_same_v<T, std::size_t>) {
      if (!v.is_number_unsigned()) {
        throw SchemaError(std::string("'") + name + "' holds a non-index");
      }
      out.push_back(v.get<std::size_t>());
    } else {
      if (!v.is_number()) throw SchemaError(std::string("'") + name + "' holds a non-number");
      const double d = v.get<double>();
      if (!std::isfinite(d)) throw SchemaError(std::string("'") + name + "' holds a non-finite value");
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace

std::string InTreeToJson(const InTree& tree) {
  Json doc;
  doc["n"] = tree.size();
  doc["parent"] = tree.parent;
  doc["potential"] = tree.potential;
  doc["edge_length"] = tree.edge_length;
  doc["cut_flags"] = tree.cut_flags;
  return doc.dump() + "\n";
}

InTree InTreeFromJson(std::string_view text) {
  const Json doc = Parse(text);
  const Json& n_field = Field(doc, "n");
  if (!n_field.is_number_unsigned()) throw SchemaError("'n' is not a count");
  const auto n = n_field.get<std::size_t>();
  InTree tree;
  tree.parent = Array<std::size_t>(doc, "parent", n);
  tree.potential = Array<double>(doc, "potential", n);
  tree.edge_length = Array<double>(doc, "edge_length", n);
  tree.cut_flags = Array<bool>(doc, "cut_flags", n);
  for (double w : tree.edge_length) {
    if (w < 0.0) throw SchemaError("negative edge length");
  }
  ValidateInTree(tree);
  return tree;
}

std::string PotentialToJson(const PotentialField& field) {
  Json doc;
  doc["sdef"] = ToString(field.kind);
  doc["transform"] = ToString(field.transform);
  doc["s"] = field.s;
  doc["p"] = field.p;
  return doc.dump() + "\n";
}

PotentialField PotentialFromJson(std::string_view text) {
  const Json doc = Parse(text);
  PotentialField field;
  const Json& sdef = Field(doc, "sdef");
  const Json& transform = Field(doc, "transform");
  if (!sdef.is_string() || !transform.is_string()) {
    throw SchemaError("'sdef' and 'transform' must be strings");
  }
  const auto kind = ParseLocalSizeKind(sdef.get<std::string>());
  const auto t = ParseTransformKind(transform.get<std::string>());
  if (!kind || !t) throw SchemaError("unknown sdef or transform");
  field.kind = *kind;
  field.transform = *t;
  const Json& s = Field(doc, "s");
  if (!s.is_array()) throw SchemaError("'s' is not an array");
  field.s = Array<double>(doc, "s", s.size());
  field.p = Array<double>(doc, "p", s.size());
  return field;
}

}  // namespace itclust
