// Copyright 2026 The srglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "srglab/graph.hpp"

namespace srglab {

/// Raised for malformed edge-list or partition text. `line` is 1-based; 0
/// means the problem is not tied to a single line (e.g. truncation).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text format:
//   n m
//   u v      (m lines, 0-based)
// Lines starting with '#' and blank lines are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph load_edge_list(const std::string& path);

}  // namespace srglab
