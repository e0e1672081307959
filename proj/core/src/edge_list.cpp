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

#include "srglab/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace srglab {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t seen = 0;
  std::vector<VertexPair> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = split_ws(raw);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) throw ParseError(line_no, "expected two fields, found " + std::to_string(toks.size()));
    if (!have_header) {
      n = parse_count(toks[0], line_no, "vertex count");
      m = parse_count(toks[1], line_no, "edge count");
      if (n < 1 || n > Graph::kMaxVertices)
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " outside 1.." +
                                      std::to_string(Graph::kMaxVertices));
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (seen == m) throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
    const auto u = parse_count(toks[0], line_no, "vertex");
    const auto v = parse_count(toks[1], line_no, "vertex");
    if (u >= n || v >= n)
      throw ParseError(line_no, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                                    std::to_string(n - 1));
    if (u == v) throw ParseError(line_no, "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++seen;
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'n m' header");
  if (seen != m)
    throw ParseError(line_no + 1, "truncated: declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(seen));
  return build_graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

}  // namespace srglab
