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
#include <string>
#include <string_view>

#include "srglab/graph.hpp"
#include "srglab/srg.hpp"

namespace srglab {

bool is_prime(std::uint64_t q);

/// Paley graph on Z_q: u ~ v iff u - v is a nonzero square mod q.
/// q must be a prime with q = 1 (mod 4).
Graph paley(std::uint32_t q);

/// Line graph of K_m: vertices are 2-subsets of {0..m-1}, adjacent iff they
/// meet. Vertex index follows lexicographic order of the pairs. m >= 4.
Graph triangular(std::uint32_t m);

/// m x m rook's graph: (i, j) is vertex i*m + j; adjacent iff same row or
/// same column. m >= 2.
Graph lattice(std::uint32_t m);

/// r disjoint copies of K_m; clique c occupies vertices c*m .. c*m+m-1.
Graph disjoint_cliques(std::uint32_t r, std::uint32_t m);

enum class Family { Paley, Triangular, Lattice, Cliques };

/// A generator addressed by name, e.g. "paley:13", "triangular:5",
/// "lattice:4", "cliques:3x4"; a leading '~' selects the complement.
struct FamilySpec {
  Family family = Family::Paley;
  std::uint32_t a = 0;  // q, m, m, or r
  std::uint32_t b = 0;  // clique size for Cliques, unused otherwise
  bool complemented = false;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline constexpr std::string_view kFamilyGrammar =
    "[~]paley:<prime q = 1 mod 4> | [~]triangular:<m >= 4> | [~]lattice:<m >= 2> | [~]cliques:<r>x<m>";

/// Throws std::invalid_argument (message includes the accepted grammar).
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string family_name(Family f);

/// Checks generator preconditions; throws std::invalid_argument if unmet.
void validate(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

/// Closed-form parameters of the generated graph (complemented if asked).
SrgParams closed_form_params(const FamilySpec& spec);

}  // namespace srglab
