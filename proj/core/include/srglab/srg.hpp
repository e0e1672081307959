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
#include <variant>

#include "srglab/graph.hpp"

namespace srglab {

/// Parameters (n, k, lambda, mu) of a strongly regular graph.
///
/// This is a plain value: constructing one does not check the SRG
/// relations, so perturbed quadruples can be fed to identity_check.
/// Use params_violation() when the invariants matter.
struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const SrgParams& p);  // "SR(n,k,lambda,mu)"

/// Reason the quadruple cannot be SRG parameters, or nullopt if
/// k < n, lambda < k, mu <= k, all non-negative and k(k-lambda-1) = (n-k-1)mu.
std::optional<std::string> params_violation(const SrgParams& p);

struct NotRegular {
  Vertex vertex;       // lowest-index vertex of minimum degree
  std::size_t degree;
  std::size_t max_degree;
};

struct CodegreeMismatch {
  Vertex u;
  Vertex v;
  bool adjacent;
  std::size_t codegree;
  std::size_t expected;  // codegree of the first pair of the same kind
};

struct Degenerate {
  std::string reason;
};

struct SrgVerdict {
  std::variant<SrgParams, NotRegular, CodegreeMismatch, Degenerate> outcome;

  bool is_srg() const { return std::holds_alternative<SrgParams>(outcome); }
  const SrgParams& params() const { return std::get<SrgParams>(outcome); }
};

std::string to_string(const SrgVerdict& v);

/// Exhaustive check of regularity and of the adjacent / non-adjacent pair
/// codegrees. Needs at least one edge and one non-edge, otherwise the
/// verdict is Degenerate. Witnesses are the lexicographically first
/// offending vertex or pair, so the verdict is deterministic.
SrgVerdict verify_srg(const Graph& g);

/// k(k - lambda - 1) - (n - k - 1) mu, exactly.
std::int64_t identity_check(const SrgParams& p);

/// Parameters of the complement: (n, n-1-k, n-2-2k+mu, n-2k+lambda).
/// Throws std::invalid_argument naming the first negative component.
SrgParams complement_params(const SrgParams& p);

/// True for rK_m (mu = 0) and its complements (n - 2k + lambda = 0).
/// Throws std::invalid_argument if p violates the SRG invariants.
bool is_trivial(const SrgParams& p);

struct FeasibilityReport {
  SrgParams params;
  bool conference = false;           // 2k + (n-1)(lambda-mu) == 0
  std::int64_t discriminant = 0;     // (lambda-mu)^2 + 4(k-mu)
  bool integral_eigenvalues = false; // discriminant is a perfect square
  double r = 0.0;                    // larger non-principal eigenvalue
  double s = 0.0;
  double f = 0.0;                    // multiplicity of r
  double g = 0.0;                    // multiplicity of s
  bool integral_multiplicities = false;
  bool feasible = false;
  std::string note;
};

/// Eigenvalue multiplicity integrality test. Throws std::invalid_argument
/// for quadruples that are not valid nontrivial SRG parameters.
FeasibilityReport eigen_feasibility(const SrgParams& p);

}  // namespace srglab
