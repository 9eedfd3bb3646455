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
#include <stdexcept>
#include <string>

namespace itclust {

/// Coarse classification used by the command line tool to pick an exit code.
enum class ErrorCategory { kInput, kGeometry, kCutter };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Geometry.
class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& what)
      : Error(ErrorCategory::kGeometry, what) {}
};

// Input parsing and validation.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(ErrorCategory::kInput, what) {}
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : ParseError(line, "", detail) {}
  /// Message reads "file:line: detail", or "line N: detail" without a file.
  ParseError(std::size_t line, const std::string& file,
             const std::string& detail)
      : InputError((file.empty() ? "line " : file + ":") +
                   std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

class DimensionError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateIndex : public ParseError {
 public:
  using ParseError::ParseError;
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

class LengthMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NonPositiveSize : public InputError {
 public:
  using InputError::InputError;
};

class ClusterTooSmall : public InputError {
 public:
  using InputError::InputError;
};

// Edge cutting.
class CutterError : public Error {
 public:
  explicit CutterError(const std::string& what)
      : Error(ErrorCategory::kCutter, what) {}
};

class KTooLarge : public CutterError {
 public:
  using CutterError::CutterError;
};

class InvalidCutNode : public CutterError {
 public:
  InvalidCutNode(std::size_t node, const std::string& what)
      : CutterError(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

class InsufficientLabels : public CutterError {
 public:
  using CutterError::CutterError;
};

}  // namespace itclust
