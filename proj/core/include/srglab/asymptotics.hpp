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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srglab/families.hpp"
#include "srglab/graph.hpp"
#include "srglab/rational.hpp"
#include "srglab/srg.hpp"

namespace srglab {

/// Limits (d, a, c) of k/n, lambda/n, mu/n along an SRG sequence.
class CsrLimits {
 public:
  /// Throws std::invalid_argument unless all three lie in [0, 1] and
  /// d >= a, d >= c.
  CsrLimits(Rational d, Rational a, Rational c);

  const Rational& d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& c() const { return c_; }

  friend bool operator==(const CsrLimits&, const CsrLimits&) = default;

 private:
  Rational d_;
  Rational a_;
  Rational c_;
};

std::string to_string(const CsrLimits& lim);

/// d^2 - (a - c) d - c.
Rational eq1_residual(const CsrLimits& lim);

/// (1 - d, 1 - 2d + c, 1 - 2d + a); throws if a component leaves [0, 1].
CsrLimits complement_limits(const CsrLimits& lim);

struct TargetVerdict {
  bool holds = false;
  Rational a_gap;  // |a - d^2|
  Rational c_gap;  // |c - d^2|
};

inline const Rational kTargetTolerance = Rational(1, 1'000'000'000'000LL);

/// Whether a = c = d^2 up to kTargetTolerance (exact comparison).
TargetVerdict main_theorem_target(const CsrLimits& lim);

struct ProofConstants {
  Rational delta;
  Rational epsilon;
  BigInt l;
};

/// delta = min{|a-c|, |d-a|, |d-c|, 1/10}, eps = (delta/20)^2, l = ceil(1/eps).
/// Throws std::invalid_argument ("proof hypothesis violated") when any of
/// |a-c|, |d-a|, |d-c| is zero.
ProofConstants proof_constants(const CsrLimits& lim);

/// Family addressed for a sweep: the free parameter varies, cliques hold
/// either m or r fixed.
struct SweepFamily {
  Family family = Family::Paley;
  bool complemented = false;
  std::optional<std::uint32_t> fixed_m;  // cliques: vary r
  std::optional<std::uint32_t> fixed_r;  // cliques: vary m
};

inline constexpr std::string_view kSweepGrammar =
    "[~]paley | [~]triangular | [~]lattice | [~]cliques:m=<m> | [~]cliques:r=<r>";

SweepFamily parse_sweep_family(std::string_view text);
FamilySpec member(const SweepFamily& f, std::uint32_t size);
/// True if `size` is a valid free parameter for the family.
bool admissible(const SweepFamily& f, std::uint32_t size);

/// "5,13,17" or "10..60" (every admissible value in range) or a mix.
std::vector<std::uint32_t> parse_sizes(std::string_view text, const SweepFamily& f);

struct DeviationRow {
  FamilySpec spec;
  std::string param;
  SrgParams params;
  Rational k_over_n;
  Rational lambda_over_n;
  Rational mu_over_n;
  Rational dev_lambda;  // |lambda - k^2/n|
  Rational dev_mu;      // |mu - k^2/n|
  Rational dev_lambda_over_n;
  Rational dev_mu_over_n;
};

DeviationRow deviation_row(const FamilySpec& spec, const SrgParams& p);

/// Generates each member, verifies it exhaustively and returns rows sorted
/// by n. Throws if a size is inadmissible or a member fails verification.
std::vector<DeviationRow> family_sweep(const SweepFamily& f, const std::vector<std::uint32_t>& sizes);

inline constexpr std::string_view kSweepCsvHeader =
    "family,param,n,k,lambda,mu,k_over_n,dev_lambda,dev_mu,dev_lambda_over_n,dev_mu_over_n";

void write_sweep_csv(std::ostream& out, const std::vector<DeviationRow>& rows);

/// (1/n^2) * sum over unordered pairs u != v of |codeg(u,v) - k^2/n|.
/// Throws std::invalid_argument if g is not regular.
Rational codegree_deviation(const Graph& g);

}  // namespace srglab
