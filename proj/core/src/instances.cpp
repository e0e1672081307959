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

#include "srglab/instances.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace srglab {

namespace {

void random_edges(GraphBuilder& b, const VertexSet& X, const VertexSet& Y, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (Vertex u : X)
    for (Vertex v : Y)
      if (coin(rng)) b.add_edge(u, v);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
}

}  // namespace

BipartiteInstance random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  check_probability(p);
  if (a == 0 || b == 0) throw std::invalid_argument("random_bipartite: sides must be nonempty");
  const std::size_t n = a + b;
  VertexSet A = VertexSet::range(n, 0, static_cast<Vertex>(a));
  VertexSet B = VertexSet::range(n, static_cast<Vertex>(a), static_cast<Vertex>(n));
  GraphBuilder builder(n);
  std::mt19937_64 rng(seed);
  random_edges(builder, A, B, p, rng);
  return {std::move(builder).build(), std::move(A), std::move(B)};
}

BipartiteInstance two_block_pair(std::size_t half) {
  if (half == 0) throw std::invalid_argument("two_block_pair: half must be >= 1");
  const std::size_t n = 4 * half;
  const auto h = static_cast<Vertex>(half);
  GraphBuilder builder(n);
  for (Vertex u = 0; u < h; ++u)
    for (Vertex v = 2 * h; v < 3 * h; ++v) builder.add_edge(u, v);
  return {std::move(builder).build(), VertexSet::range(n, 0, 2 * h), VertexSet::range(n, 2 * h, 4 * h)};
}

BipartiteInstance random_block_pair(std::size_t a, std::size_t b, std::size_t blocks, std::uint64_t seed) {
  if (blocks == 0 || blocks > a || blocks > b) throw std::invalid_argument("random_block_pair: bad block count");
  const std::size_t n = a + b;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  GraphBuilder builder(n);
  for (std::size_t i = 0; i < blocks; ++i) {
    const auto xa = static_cast<Vertex>(i * a / blocks);
    const auto xb = static_cast<Vertex>((i + 1) * a / blocks);
    for (std::size_t j = 0; j < blocks; ++j) {
      const auto ya = static_cast<Vertex>(a + j * b / blocks);
      const auto yb = static_cast<Vertex>(a + (j + 1) * b / blocks);
      random_edges(builder, VertexSet::range(n, xa, xb), VertexSet::range(n, ya, yb), dens(rng), rng);
    }
  }
  return {std::move(builder).build(), VertexSet::range(n, 0, static_cast<Vertex>(a)),
          VertexSet::range(n, static_cast<Vertex>(a), static_cast<Vertex>(n))};
}

BipartiteInstance complete_pair(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  GraphBuilder builder(n);
  for (Vertex u = 0; u < a; ++u)
    for (auto v = static_cast<Vertex>(a); v < n; ++v) builder.add_edge(u, v);
  return {std::move(builder).build(), VertexSet::range(n, 0, static_cast<Vertex>(a)),
          VertexSet::range(n, static_cast<Vertex>(a), static_cast<Vertex>(n))};
}

BipartiteInstance empty_pair(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  return {GraphBuilder(n).build(), VertexSet::range(n, 0, static_cast<Vertex>(a)),
          VertexSet::range(n, static_cast<Vertex>(a), static_cast<Vertex>(n))};
}

TripartiteInstance random_tripartite(std::size_t t, double p1, double p2, std::uint64_t seed) {
  check_probability(p1);
  check_probability(p2);
  if (t == 0) throw std::invalid_argument("random_tripartite: t must be >= 1");
  const std::size_t n = 3 * t;
  const auto tt = static_cast<Vertex>(t);
  VertexSet A1 = VertexSet::range(n, 0, tt);
  VertexSet A2 = VertexSet::range(n, tt, 2 * tt);
  VertexSet B = VertexSet::range(n, 2 * tt, 3 * tt);
  GraphBuilder builder(n);
  std::mt19937_64 rng(seed);
  random_edges(builder, A1, B, p1, rng);
  random_edges(builder, A2, B, p2, rng);
  return {std::move(builder).build(), std::move(A1), std::move(A2), std::move(B)};
}

MultiInstance random_multi(const MultiOptions& opt) {
  if (opt.t < 2 || opt.p < 1) throw std::invalid_argument("random_multi: need t >= 2 and p >= 1");
  if (opt.densities.empty()) throw std::invalid_argument("random_multi: density list is empty");
  for (double d : opt.densities) check_probability(d);
  check_probability(opt.inner_density);

  const std::size_t heads = opt.two_sided ? 2 : 1;
  const std::size_t n = (heads + opt.p) * opt.t;
  const auto t = static_cast<Vertex>(opt.t);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, opt.densities.size() - 1);

  MultiInstance inst;
  inst.A1 = VertexSet::range(n, 0, t);
  if (opt.two_sided) inst.A2 = VertexSet::range(n, t, 2 * t);
  for (std::size_t i = 0; i < opt.p; ++i) {
    const auto lo = static_cast<Vertex>((heads + i) * opt.t);
    inst.Bs.push_back(VertexSet::range(n, lo, lo + t));
  }

  GraphBuilder builder(n);
  for (const auto& B : inst.Bs) {
    random_edges(builder, inst.A1, B, opt.densities[pick(rng)], rng);
    if (opt.two_sided) random_edges(builder, inst.A2, B, opt.densities[pick(rng)], rng);
  }

  if (opt.two_sided) {
    std::vector<VertexPair> all;
    all.reserve(opt.t * opt.t);
    for (Vertex u : inst.A1)
      for (Vertex v : inst.A2) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(all.size() / 2);
    std::sort(all.begin(), all.end());
    inst.S = std::move(all);
  } else {
    std::bernoulli_distribution coin(opt.inner_density);
    for (Vertex u = 0; u < t; ++u)
      for (Vertex v = u + 1; v < t; ++v)
        if (coin(rng)) {
          builder.add_edge(u, v);
          inst.S.emplace_back(u, v);
        }
  }
  inst.graph = std::move(builder).build();
  return inst;
}

}  // namespace srglab
