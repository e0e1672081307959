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
#include "srglab/rational.hpp"

namespace srglab {

enum class PairStatus { Certified, Falsified, Unknown };
std::string to_string(PairStatus s);

/// Subsets X of A and Y of B with |X| >= eps|A|, |Y| >= eps|B| and
/// |d(A,B) - d(X,Y)| >= eps.
struct UniformityWitness {
  VertexSet X;
  VertexSet Y;
  std::size_t edges_xy = 0;
  Rational density_xy;
  Rational gap;
  std::string source;  // "degree-prefix", "neighborhood" or "random"
};

/// Degree / codegree deviation statistics behind a certificate.
struct CertificateStats {
  Rational d1;
  Rational d2;
  Rational threshold;
};

struct PairVerdict {
  PairStatus status = PairStatus::Unknown;
  std::size_t edges = 0;
  Rational density;
  Rational epsilon;
  std::optional<UniformityWitness> witness;
  std::optional<CertificateStats> certificate;
};

/// Searches for a witness that (A, B) is not eps-uniform. Structured
/// candidates are tried first (degree-sorted prefixes of A and B, then
/// neighbourhood-seeded sets), followed by `trials` seeded random subsets.
/// Returns Falsified with the first witness found, otherwise Unknown.
/// Never returns Certified.
PairVerdict falsify_uniformity(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps,
                               std::size_t trials, std::uint64_t seed);

struct CertifyOptions {
  /// Bound applied to both deviation statistics; eps^3 when unset.
  std::optional<Rational> threshold;
};

/// One-sided degree/codegree criterion:
///   D1 = sum_u |deg_B(u) - d|B|| / (|A||B|)
///   D2 = sum_{u != u'} |codeg_B(u,u') - d^2|B|| / (|A|^2 |B|)
/// Certified iff both are <= threshold, otherwise Unknown.
PairVerdict certify_uniformity(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps,
                               const CertifyOptions& options = {});

/// Certificate first, falsifier only if the certificate is inconclusive.
PairVerdict classify_pair(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps,
                          std::size_t trials, std::uint64_t seed);

/// V_0 (exceptional) plus p classes of equal size t.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless the classes are disjoint, cover
  /// 0..n-1 together with V_0, and all have the same nonzero size.
  Partition(std::size_t n, std::vector<Vertex> exceptional, std::vector<std::vector<Vertex>> classes);

  std::size_t order() const { return n_; }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t class_size() const { return classes_.empty() ? 0 : classes_.front().size(); }
  const std::vector<Vertex>& exceptional() const { return exceptional_; }
  const std::vector<std::vector<Vertex>>& classes() const { return classes_; }
  /// Class i as a vertex set, 0-based over the non-exceptional classes.
  VertexSet class_set(std::size_t i) const { return VertexSet(n_, classes_[i]); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Vertex> exceptional_;
  std::vector<std::vector<Vertex>> classes_;
};

// "V0: v v v" then "V1: ..." one line per class.
void write_partition(std::ostream& out, const Partition& p);
Partition read_partition(std::istream& in, std::size_t n);

struct BuildOptions {
  std::size_t classes = 1;      // l
  Rational epsilon = Rational(1, 5);
  std::size_t max_rounds = 16;
  std::size_t trials = 32;
  std::uint64_t seed = 0;
};

struct PartitionBuild {
  Partition partition;
  std::size_t rounds = 0;
  bool converged = false;  // last round found no falsified pair
};

/// Heuristic refinement: random equitable start, then rounds of witness
/// search, refinement by witness membership, merging of parts with matching
/// density profiles, and re-equalisation with the remainder spilled into V_0.
/// Throws std::invalid_argument if n < 2l.
PartitionBuild build_partition(const Graph& g, const BuildOptions& options);

struct PartitionReport {
  Rational epsilon;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t t = 0;
  std::size_t exceptional_size = 0;
  bool condition_i = false;   // |V_0| < eps n
  bool condition_ii = false;  // every class has <= eps p falsified partners
  std::vector<std::size_t> falsified_per_class;
  std::vector<std::vector<std::size_t>> edges;  // e(V_i, V_j); diagonal is e(V_i)
  std::vector<std::vector<PairStatus>> status;  // diagonal unused
  std::size_t certified = 0;
  std::size_t falsified = 0;
  std::size_t unknown = 0;

  Rational density(std::size_t i, std::size_t j) const {
    return Rational(static_cast<long long>(edges[i][j]), static_cast<long long>(t * t));
  }
};

PartitionReport verify_partition(const Graph& g, const Partition& P, const Rational& eps, std::size_t trials,
                                 std::uint64_t seed);

enum class DensityClass { Low, Middle, High };
std::string to_string(DensityClass c);

struct PairDensityClass {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational density;
  DensityClass cls = DensityClass::Middle;
  Rational spread;                 // d - d^2
  std::optional<bool> spread_ok;   // 0 <= d - d^2 <= sqrt(eps); set for Low/High
};

/// Classifies a density d of a t x t pair: Low if e <= sqrt(eps) t^2,
/// High if e >= (1 - sqrt(eps)) t^2, Middle otherwise. Exact.
DensityClass classify_density(const Rational& d, const Rational& eps);
bool spread_within(const Rational& d, const Rational& eps);

std::vector<PairDensityClass> density_dichotomy(const PartitionReport& report, const Rational& eps);

/// splitmix64-derived sub-seed for pair (i, j) under `seed`.
std::uint64_t pair_seed(std::uint64_t seed, std::uint64_t i, std::uint64_t j);

}  // namespace srglab
