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
#include <vector>

#include "srglab/graph.hpp"

namespace srglab {

// Seeded random instances for the counting-lemma checks. All generators are
// bit-reproducible for a fixed seed on a given standard library.

struct BipartiteInstance {
  Graph graph;
  VertexSet A;  // vertices 0..a-1
  VertexSet B;  // vertices a..a+b-1
};

/// Each A-B pair is an edge independently with probability p; no other edges.
BipartiteInstance random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed);

/// A = A1 + A2, B = B1 + B2 with |A1| = |A|/2, |B1| = |B|/2; complete between
/// A1 and B1 and empty everywhere else, so d(A,B) = 1/4 while d(A1,B1) = 1.
BipartiteInstance two_block_pair(std::size_t half);

/// A and B cut into `blocks` near-equal parts each; every block pair gets an
/// independent density drawn uniformly from [0, 1].
BipartiteInstance random_block_pair(std::size_t a, std::size_t b, std::size_t blocks, std::uint64_t seed);

/// Complete (or empty) bipartite pair on a + b vertices.
BipartiteInstance complete_pair(std::size_t a, std::size_t b);
BipartiteInstance empty_pair(std::size_t a, std::size_t b);

struct TripartiteInstance {
  Graph graph;
  VertexSet A1;
  VertexSet A2;
  VertexSet B;
};

/// Blocks of size t; A1-B with probability p1, A2-B with probability p2.
TripartiteInstance random_tripartite(std::size_t t, double p1, double p2, std::uint64_t seed);

struct MultiInstance {
  Graph graph;
  VertexSet A1;
  VertexSet A2;                   // empty for the one-sided (dle) layout
  std::vector<VertexSet> Bs;
  std::vector<VertexPair> S;
};

struct MultiOptions {
  std::size_t t = 80;
  std::size_t p = 5;
  std::vector<double> densities{0.3, 0.7};
  double inner_density = 0.5;     // density of the random graph on A (dle)
  bool two_sided = false;         // lebs layout: A1, A2 and S a random half of A1 x A2
  std::uint64_t seed = 0;
};

/// dle layout: A then B_1..B_p, each (A, B_i) random with a density drawn
/// from `densities`; S is the edge set of a random graph on A.
/// lebs layout: A1, A2 then B_1..B_p; S is a random half of A1 x A2.
MultiInstance random_multi(const MultiOptions& options);

}  // namespace srglab
