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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srglab/graph.hpp"

namespace srglab::cli {

// Stable exit codes for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  std::string source;        // family spec, graph path, or lemma instance
  std::string lemma;         // lemma id for `lemma`
  std::string sizes;         // size list for `sweep`
  std::string eps = "0.1";
  unsigned r = 2;
  std::uint64_t seed = 0;
  std::size_t trials = 32;
  std::size_t rounds = 16;
  std::size_t classes = 4;   // l for `regularity`
  std::string out;
  std::string report;        // report path for `regularity`
  std::optional<Format> format;
  std::vector<long long> params;  // n k lambda mu for `feasibility`
};

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_lemma(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_regularity(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_feasibility(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Reads a graph from an edge-list file, or generates it when `source` is a
/// family spec such as "paley:13" and no file of that name exists.
Graph load_graph_source(const std::string& source);

/// Writes `content` to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& content);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srglab::cli
