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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srglab/graph.hpp"
#include "srglab/rational.hpp"
#include "srglab/regularity.hpp"

namespace srglab {

/// phi(r) = r! * sum_{i=0}^{r-1} 1/i!, an integer. 0 <= r <= 20.
std::uint64_t phi(unsigned r);

enum class HypothesisStatus { Met, Vacuous };
std::string to_string(HypothesisStatus h);

/// How measured and bound are compared for a verdict.
///   Below:   measured <  bound  (strict upper bound; slack = bound - measured)
///   AtLeast: measured >= bound  (non-strict lower bound; slack = measured - bound)
enum class BoundKind { Below, AtLeast };

/// Uniformity verdicts of the pairs a lemma presumes eps-uniform.
struct UniformitySummary {
  std::size_t certified = 0;
  std::size_t falsified = 0;
  std::size_t unknown = 0;
};

struct LemmaReport {
  std::string lemma;            // "xsec", "xsec1", "xsec2.i", "xple2.ii", "dle", ...
  HypothesisStatus hypothesis = HypothesisStatus::Met;
  std::string hypothesis_note;
  UniformitySummary uniformity;
  Rational epsilon;
  unsigned r = 0;               // set-size for Xsec-type lemmas, 2 otherwise
  Rational enumerated;          // number of sets or pairs examined
  Rational measured;
  Rational bound;
  BoundKind kind = BoundKind::Below;
  Rational slack;
  bool holds = false;
  // Averaged form (|S| >= alpha t^2 with alpha = |S| / t^2); dle and lebs only.
  std::optional<Rational> averaged_measured;
  std::optional<Rational> averaged_bound;

  /// A violation only counts against the lemma when its hypothesis is met.
  bool acceptable() const { return holds || hypothesis == HypothesisStatus::Vacuous; }
};

enum class Tail { Lower, Upper };

/// Number of r-sets R of A with codegree c into Y, indexed by c. r in 1..3.
std::vector<std::uint64_t> codegree_histogram(const Graph& g, const VertexSet& A, const VertexSet& Y, unsigned r);

struct EnumerationBudget {
  unsigned max_r = 3;
  std::size_t max_set = 300;
  std::size_t max_pairs = 1'000'000;
};

/// Counts r-sets R of A with d_Y(R) <= (d-eps)^r |Y| (Lower) or
/// d_Y(R) >= (d+eps)^r |Y| (Upper); holds iff the count is below
/// eps phi(r) C(|A|, r). Hypothesis: (d -+ eps)^(r-1) |Y| > eps |B|.
LemmaReport xsec_check(const Graph& g, const VertexSet& A, const VertexSet& B, const VertexSet& Y,
                       const Rational& eps, unsigned r, Tail tail, const EnumerationBudget& budget = {});

/// Parts (i) and (ii): at least (1 - eps phi(r)) C(|A|, r) r-sets satisfy
/// codeg_B(R) - d^r|B| > -eps r |B|, respectively < eps r |B|.
std::pair<LemmaReport, LemmaReport> xsec2_check(const Graph& g, const VertexSet& A, const VertexSet& B,
                                                const Rational& eps, unsigned r,
                                                const EnumerationBudget& budget = {});

/// Parts (i) and (ii): at least (1 - 2 eps)|A1||A2| pairs (u, v) satisfy
/// codeg_B(uv) - d1 d2 |B| > -2 eps |B|, respectively < 2 eps |B|.
std::pair<LemmaReport, LemmaReport> xple2_check(const Graph& g, const VertexSet& A1, const VertexSet& A2,
                                                const VertexSet& B, const Rational& eps,
                                                const EnumerationBudget& budget = {});

/// |sum_{uv in S} sum_i codeg_{B_i}(uv) - t|S| sum_i d_i^2| < 5 p eps t^3,
/// S a set of 2-subsets of A, |A| = |B_i| = t.
LemmaReport dle_check(const Graph& g, const VertexSet& A, const std::vector<VertexSet>& Bs,
                      const std::vector<VertexPair>& S, const Rational& eps);

/// |sum_{(u,v) in S} sum_i codeg_{B_i}(uv) - t|S| sum_i d_1i d_2i| < 6 eps p t^3,
/// S a subset of A1 x A2, all classes of size t.
LemmaReport lebs_check(const Graph& g, const VertexSet& A1, const VertexSet& A2, const std::vector<VertexSet>& Bs,
                       const std::vector<VertexPair>& S, const Rational& eps);

/// sum over pairs in S of sum_i codeg_{B_i}(u, v), accumulated class by class.
std::uint64_t codegree_sum_by_class(const Graph& g, const std::vector<VertexSet>& Bs,
                                    const std::vector<VertexPair>& S);
/// Same quantity, accumulated pair by pair against the union of the B_i
/// (the classes are disjoint, so the union codegree is the sum).
std::uint64_t codegree_sum_by_pair(const Graph& g, const std::vector<VertexSet>& Bs,
                                   const std::vector<VertexPair>& S);

}  // namespace srglab
