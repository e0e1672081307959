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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace srglab {

using Vertex = std::uint32_t;
using Word = std::uint64_t;
using VertexPair = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kWordBits = 64;

// Marks a hot function for runtime dispatch to a hardware-popcount clone.
#if defined(__GNUC__) && defined(__x86_64__) && defined(__linux__)
#define SRGLAB_POPCNT_CLONES __attribute__((target_clones("popcnt", "default")))
#else
#define SRGLAB_POPCNT_CLONES
#endif

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

// Population count of a & b over the shared prefix of both spans.
inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t count = 0;
  const std::size_t len = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < len; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

inline std::size_t popcount_and3(std::span<const Word> a, std::span<const Word> b,
                                 std::span<const Word> c) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    count += static_cast<std::size_t>(std::popcount(a[i] & b[i] & c[i]));
  return count;
}

/// A subset of the vertex range 0..n-1 of some graph.
///
/// Members are kept sorted and unique; a bitmask of the universe is kept
/// alongside so intersections with adjacency rows are word-parallel.
class VertexSet {
 public:
  VertexSet() = default;
  /// Throws std::invalid_argument if any member is >= universe.
  VertexSet(std::size_t universe, std::vector<Vertex> members);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::vector<Vertex>(members)) {}

  static VertexSet range(std::size_t universe, Vertex first, Vertex last);
  static VertexSet all(std::size_t universe) { return range(universe, 0, static_cast<Vertex>(universe)); }

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const {
    return v < universe_ && ((mask_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }

  const std::vector<Vertex>& members() const { return members_; }
  std::span<const Word> mask() const { return mask_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  bool disjoint_from(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
  std::vector<Word> mask_;
};

/// Dense undirected simple graph on vertices 0..n-1.
///
/// Adjacency is stored as one bit row per vertex. A Graph is immutable once
/// built; every const member is safe to call from many threads at once.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 20000;

  Graph() = default;

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  std::size_t row_words() const { return stride_; }

  bool adjacent(Vertex u, Vertex v) const {
    return ((rows_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  std::span<const Word> row(Vertex u) const {
    return {rows_.data() + static_cast<std::size_t>(u) * stride_, stride_};
  }
  std::size_t degree(Vertex u) const { return degrees_[u]; }

  std::vector<Vertex> neighbors(Vertex u) const;
  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<VertexPair> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t edges_ = 0;
  std::vector<Word> rows_;
  std::vector<std::uint32_t> degrees_;
};

/// Mutable staging area for a Graph. Single-threaded.
class GraphBuilder {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= Graph::kMaxVertices.
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const { return graph_.n_; }
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

  Graph build() &&;

 private:
  void set_bit(Vertex u, Vertex v) {
    graph_.rows_[u * graph_.stride_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  Graph graph_;
};

Graph build_graph(std::size_t n, std::span<const VertexPair> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<VertexPair> edges) {
  return build_graph(n, std::span<const VertexPair>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g);

/// Number of neighbours of u inside Y.
std::size_t degree_in(const Graph& g, Vertex u, const VertexSet& Y);

/// Number of vertices adjacent to every member of R. R must be nonempty.
std::size_t codegree(const Graph& g, const VertexSet& R);
/// Number of vertices of Y adjacent to every member of R. R must be nonempty.
std::size_t codegree_in(const Graph& g, const VertexSet& R, const VertexSet& Y);

inline std::size_t pair_codegree(const Graph& g, Vertex u, Vertex v) {
  return popcount_and(g.row(u), g.row(v));
}
inline std::size_t pair_codegree_in(const Graph& g, Vertex u, Vertex v, const VertexSet& Y) {
  return popcount_and3(g.row(u), g.row(v), Y.mask());
}

/// e(A, B). A and B must be nonempty and disjoint.
std::size_t edges_between(const Graph& g, const VertexSet& A, const VertexSet& B);
/// e(A, B) / (|A| |B|).
double density(const Graph& g, const VertexSet& A, const VertexSet& B);

/// Number of edges with both endpoints in A.
std::size_t induced_edge_count(const Graph& g, const VertexSet& A);

}  // namespace srglab
