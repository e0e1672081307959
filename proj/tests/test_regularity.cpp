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

#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "srglab/edge_list.hpp"
#include "srglab/families.hpp"
#include "srglab/instances.hpp"
#include "srglab/regularity.hpp"

using namespace srglab;

namespace {

// D1, D2 of the degree/codegree criterion by direct summation.
std::pair<Rational, Rational> deviation_stats(const oracle::Matrix& m, const std::vector<Vertex>& A,
                                              const std::vector<Vertex>& B) {
  const long long a = static_cast<long long>(A.size()), b = static_cast<long long>(B.size());
  const Rational d(oracle::edges_between(m, A, B), a * b);
  Rational s1 = 0, s2 = 0;
  for (auto u : A) {
    s1 += abs(Rational(oracle::codegree_in(m, {u}, B)) - d * b);
    for (auto w : A)
      if (w != u) s2 += abs(Rational(oracle::codegree_in(m, {u, w}, B)) - d * d * b);
  }
  return {s1 / (a * b), s2 / (a * a * b)};
}

// Independent check of a witness: sizes, membership and the density gap.
bool witness_valid(const oracle::Matrix& m, const std::vector<Vertex>& A, const std::vector<Vertex>& B,
                   const UniformityWitness& w, const Rational& eps) {
  const auto& X = w.X.members();
  const auto& Y = w.Y.members();
  if (!std::includes(A.begin(), A.end(), X.begin(), X.end())) return false;
  if (!std::includes(B.begin(), B.end(), Y.begin(), Y.end())) return false;
  const long long x = static_cast<long long>(X.size()), y = static_cast<long long>(Y.size());
  if (Rational(x) < eps * static_cast<long long>(A.size())) return false;
  if (Rational(y) < eps * static_cast<long long>(B.size())) return false;
  const Rational dab(oracle::edges_between(m, A, B), static_cast<long long>(A.size() * B.size()));
  const Rational dxy(oracle::edges_between(m, X, Y), x * y);
  return dxy == w.density_xy && abs(dab - dxy) >= eps && abs(dab - dxy) == w.gap;
}

}  // namespace

TEST_CASE("certificate statistics match direct summation") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto inst = random_block_pair(30, 26, 3, seed);
    const auto m = oracle::to_matrix(inst.graph);
    const auto [d1, d2] = deviation_stats(m, inst.A.members(), inst.B.members());
    const auto v = certify_uniformity(inst.graph, inst.A, inst.B, Rational(1, 5));
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->d1 == d1);
    CHECK(v.certificate->d2 == d2);
    CHECK(v.certificate->threshold == Rational(1, 125));
    CHECK(v.edges == static_cast<std::size_t>(oracle::edges_between(m, inst.A.members(), inst.B.members())));
  }
}

TEST_CASE("two-block pair statistics") {
  const auto inst = two_block_pair(20);
  const auto v = certify_uniformity(inst.graph, inst.A, inst.B, Rational(1, 10));
  CHECK(v.density == Rational(1, 4));
  CHECK(v.certificate->d1 == Rational(1, 4));
  const auto [d1, d2] = deviation_stats(oracle::to_matrix(inst.graph), inst.A.members(), inst.B.members());
  CHECK(v.certificate->d2 == d2);
  CHECK(v.status == PairStatus::Unknown);
}

TEST_CASE("complete and empty pairs are certified, never falsified") {
  for (const auto& inst : {complete_pair(40, 33), empty_pair(40, 33)}) {
    for (int e = 1; e < 20; ++e) {
      const Rational eps(e, 20);
      CHECK(classify_pair(inst.graph, inst.A, inst.B, eps, 16, static_cast<std::uint64_t>(e)).status ==
            PairStatus::Certified);
      CHECK(falsify_uniformity(inst.graph, inst.A, inst.B, eps, 16, static_cast<std::uint64_t>(e)).status ==
            PairStatus::Unknown);
    }
  }
}

TEST_CASE("two-block pair is falsified through degree prefixes") {
  for (std::size_t half : {5u, 20u, 50u}) {
    const auto inst = two_block_pair(half);
    const auto v = falsify_uniformity(inst.graph, inst.A, inst.B, Rational(1, 10), 1, 0);
    REQUIRE(v.status == PairStatus::Falsified);
    CHECK(v.witness->source == "degree-prefix");
    CHECK(witness_valid(oracle::to_matrix(inst.graph), inst.A.members(), inst.B.members(), *v.witness,
                        Rational(1, 10)));
  }
}

TEST_CASE("falsified witnesses re-validate on block-structured pairs") {
  std::size_t falsified = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_block_pair(36, 30, 2 + seed % 3, seed);
    const auto m = oracle::to_matrix(inst.graph);
    const Rational eps(1 + seed % 4, 10);
    const auto v = falsify_uniformity(inst.graph, inst.A, inst.B, eps, 8, seed);
    if (v.status != PairStatus::Falsified) continue;
    ++falsified;
    CHECK(witness_valid(m, inst.A.members(), inst.B.members(), *v.witness, eps));
  }
  CHECK(falsified > 20);
}

TEST_CASE("falsifier is deterministic for a seed") {
  const auto inst = random_bipartite(60, 60, 0.5, 5);
  const auto a = falsify_uniformity(inst.graph, inst.A, inst.B, Rational(3, 20), 16, 9);
  const auto b = falsify_uniformity(inst.graph, inst.A, inst.B, Rational(3, 20), 16, 9);
  CHECK(a.status == b.status);
  if (a.witness) {
    CHECK(a.witness->X == b.witness->X);
    CHECK(a.witness->Y == b.witness->Y);
  }
  CHECK(pair_seed(1, 2, 3) == pair_seed(1, 2, 3));
  CHECK(pair_seed(1, 2, 3) != pair_seed(1, 3, 2));
  CHECK(pair_seed(1, 2, 3) != pair_seed(2, 2, 3));
}

TEST_CASE("epsilon validation") {
  const auto inst = complete_pair(5, 5);
  CHECK_THROWS_AS(classify_pair(inst.graph, inst.A, inst.B, Rational(0), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_pair(inst.graph, inst.A, inst.B, Rational(1), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_pair(inst.graph, inst.A, VertexSet(10, {0, 5}), Rational(1, 2), 1, 0),
                  std::invalid_argument);
}

TEST_CASE("partition validation and text format") {
  const Partition p(7, {6}, {{0, 2, 4}, {1, 3, 5}});
  std::stringstream ss;
  write_partition(ss, p);
  CHECK(ss.str() == "V0: 6\nV1: 0 2 4\nV2: 1 3 5\n");
  CHECK(read_partition(ss, 7) == p);

  CHECK_THROWS_AS(Partition(7, {}, {{0, 2, 4}, {1, 3, 5}}), std::invalid_argument);        // 6 uncovered
  CHECK_THROWS_AS(Partition(7, {6}, {{0, 2, 4}, {1, 3}}), std::invalid_argument);          // unequal
  CHECK_THROWS_AS(Partition(7, {6, 0}, {{0, 2, 4}, {1, 3, 5}}), std::invalid_argument);    // overlap
  std::istringstream bad("V0:\nV1: 0 1 x\n");
  CHECK_THROWS_AS(read_partition(bad, 3), ParseError);
}

TEST_CASE("verify_partition on the natural clique partition") {
  const Graph g = disjoint_cliques(4, 50);
  std::vector<std::vector<Vertex>> classes(4);
  for (Vertex v = 0; v < 200; ++v) classes[v / 50].push_back(v);
  const Partition P(200, {}, classes);
  const auto rep = verify_partition(g, P, Rational(1, 25), 8, 0);
  CHECK(rep.p == 4);
  CHECK(rep.t == 50);
  CHECK(rep.condition_i);
  CHECK(rep.condition_ii);
  CHECK(rep.certified == 6);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rep.edges[i][i] == 50 * 49 / 2);
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(rep.edges[i][j] == 0);
  }
  const auto cls = density_dichotomy(rep, Rational(1, 25));
  CHECK(cls.size() == 6);
  for (const auto& c : cls) {
    CHECK(c.cls == DensityClass::Low);
    CHECK(c.spread_ok == true);
  }
}

TEST_CASE("verify_partition counts match brute force on a random partition") {
  const Graph g = triangular(12);  // 66 vertices
  std::vector<std::vector<Vertex>> classes(5);
  for (Vertex v = 0; v < 65; ++v) classes[(v * 7) % 5].push_back(v);
  const Partition P(66, {65}, classes);
  const auto rep = verify_partition(g, P, Rational(1, 5), 4, 3);
  const auto m = oracle::to_matrix(g);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const long long e = oracle::edges_between(m, classes[i], classes[j]);
      CHECK(rep.edges[i][j] == static_cast<std::size_t>(i == j ? e / 2 : e));
    }
  CHECK(rep.condition_i == (Rational(1) < Rational(66, 5)));
  CHECK(rep.certified + rep.falsified + rep.unknown == 10);
}

TEST_CASE("density classification is exact") {
  const Rational eps(1, 25);  // sqrt(eps) = 1/5
  CHECK(classify_density(Rational(1, 5), eps) == DensityClass::Low);
  CHECK(classify_density(Rational(201, 1000), eps) == DensityClass::Middle);
  CHECK(classify_density(Rational(4, 5), eps) == DensityClass::High);
  CHECK(classify_density(Rational(799, 1000), eps) == DensityClass::Middle);
  CHECK(spread_within(Rational(0), eps));
  CHECK(spread_within(Rational(1), eps));
  // d - d^2 at d = 1/2 is 1/4 > 1/5.
  CHECK_FALSE(spread_within(Rational(1, 2), eps));
  CHECK(spread_within(Rational(1, 5), eps));
}

TEST_CASE("build_partition recovers planted cliques") {
  const Graph g = disjoint_cliques(4, 50);
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    BuildOptions opt;
    opt.classes = 4;
    opt.epsilon = Rational(1, 10);
    opt.seed = seed;
    const auto built = build_partition(g, opt);
    CHECK(built.converged);
    const auto& P = built.partition;
    CHECK(P.exceptional().empty());
    REQUIRE(P.class_count() == 4);
    for (const auto& c : P.classes()) CHECK(c.back() / 50 == c.front() / 50);
  }
  BuildOptions opt;
  opt.classes = 101;
  CHECK_THROWS_AS(build_partition(g, opt), std::invalid_argument);
}

TEST_CASE("build_partition is reproducible") {
  const Graph g = triangular(14);
  BuildOptions opt;
  opt.classes = 3;
  opt.seed = 42;
  CHECK(build_partition(g, opt).partition == build_partition(g, opt).partition);
}
