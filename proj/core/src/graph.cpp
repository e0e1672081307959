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

#include "srglab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace srglab {

namespace {

void require_universe(const Graph& g, const VertexSet& s, const char* what) {
  if (s.universe() != g.order())
    throw std::invalid_argument(std::string(what) + ": vertex set universe " + std::to_string(s.universe()) +
                                " does not match graph order " + std::to_string(g.order()));
}

}  // namespace

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)), mask_(words_for(universe), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Vertex v : members_) {
    if (v >= universe_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside range 0.." +
                                  std::to_string(universe_ == 0 ? 0 : universe_ - 1));
    mask_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
}

VertexSet VertexSet::range(std::size_t universe, Vertex first, Vertex last) {
  std::vector<Vertex> members;
  if (last > first) members.reserve(last - first);
  for (Vertex v = first; v < last; ++v) members.push_back(v);
  return VertexSet(universe, std::move(members));
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  const std::size_t len = std::min(mask_.size(), other.mask_.size());
  for (std::size_t i = 0; i < len; ++i)
    if ((mask_[i] & other.mask_[i]) != 0) return false;
  return true;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Vertex v) { return other.contains(v); });
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  out.reserve(degrees_[u]);
  const auto r = row(u);
  for (std::size_t w = 0; w < r.size(); ++w) {
    Word bits = r[w];
    while (bits != 0) {
      out.push_back(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside supported range 1.." +
                                std::to_string(Graph::kMaxVertices));
  graph_.n_ = n;
  graph_.stride_ = words_for(n);
  graph_.rows_.assign(n * graph_.stride_, 0);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= graph_.n_ || v >= graph_.n_)
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside 0.." + std::to_string(graph_.n_ - 1));
  if (u == v) throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
  set_bit(u, v);
  set_bit(v, u);
}

Graph GraphBuilder::build() && {
  Graph g = std::move(graph_);
  g.degrees_.resize(g.n_);
  std::size_t total = 0;
  for (Vertex u = 0; u < g.n_; ++u) {
    std::size_t d = 0;
    for (Word w : g.row(u)) d += static_cast<std::size_t>(std::popcount(w));
    g.degrees_[u] = static_cast<std::uint32_t>(d);
    total += d;
  }
  g.edges_ = total / 2;
  return g;
}

Graph build_graph(std::size_t n, std::span<const VertexPair> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t degree_in(const Graph& g, Vertex u, const VertexSet& Y) {
  require_universe(g, Y, "degree_in");
  return popcount_and(g.row(u), Y.mask());
}

std::size_t codegree(const Graph& g, const VertexSet& R) {
  return codegree_in(g, R, VertexSet::all(g.order()));
}

std::size_t codegree_in(const Graph& g, const VertexSet& R, const VertexSet& Y) {
  require_universe(g, R, "codegree");
  require_universe(g, Y, "codegree");
  if (R.empty()) throw std::invalid_argument("codegree: R must be nonempty");
  std::vector<Word> acc(Y.mask().begin(), Y.mask().end());
  for (Vertex r : R) {
    const auto row = g.row(r);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= row[i];
  }
  std::size_t count = 0;
  for (Word w : acc) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::size_t edges_between(const Graph& g, const VertexSet& A, const VertexSet& B) {
  require_universe(g, A, "edges_between");
  require_universe(g, B, "edges_between");
  if (A.empty() || B.empty()) throw std::invalid_argument("edges_between: sets must be nonempty");
  if (!A.disjoint_from(B)) throw std::invalid_argument("edges_between: sets must be disjoint");
  std::size_t e = 0;
  for (Vertex u : A) e += popcount_and(g.row(u), B.mask());
  return e;
}

double density(const Graph& g, const VertexSet& A, const VertexSet& B) {
  const auto e = edges_between(g, A, B);
  return static_cast<double>(e) / (static_cast<double>(A.size()) * static_cast<double>(B.size()));
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& A) {
  require_universe(g, A, "induced_edge_count");
  if (A.empty()) throw std::invalid_argument("induced_edge_count: set must be nonempty");
  std::size_t twice = 0;
  for (Vertex u : A) twice += popcount_and(g.row(u), A.mask());
  return twice / 2;
}

}  // namespace srglab
