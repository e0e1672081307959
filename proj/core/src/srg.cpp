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

#include "srglab/srg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "srglab/parallel.hpp"

namespace srglab {

namespace {

struct FirstMismatch {
  bool found = false;
  Vertex u = 0;
  Vertex v = 0;
  bool adjacent = false;
  std::size_t codegree = 0;
};

// First pair (u, v), v > u, whose codegree differs from the expected value.
SRGLAB_POPCNT_CLONES
FirstMismatch scan_row(const Graph& g, Vertex u, std::size_t lambda, std::size_t mu) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v = u + 1; v < n; ++v) {
    const bool adj = g.adjacent(u, v);
    const std::size_t c = pair_codegree(g, u, v);
    if (c != (adj ? lambda : mu)) return {true, u, v, adj, c};
  }
  return {};
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

std::string to_string(const SrgParams& p) {
  return "SR(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.mu) + ")";
}

std::optional<std::string> params_violation(const SrgParams& p) {
  if (p.n < 1 || p.k < 0 || p.lambda < 0 || p.mu < 0) return "parameters must be non-negative with n >= 1";
  if (p.k >= p.n) return "k must be less than n";
  if (p.lambda >= p.k) return "lambda must be less than k";
  if (p.mu > p.k) return "mu must not exceed k";
  if (identity_check(p) != 0) return "k(k-lambda-1) != (n-k-1)mu";
  return std::nullopt;
}

std::string to_string(const SrgVerdict& v) {
  struct Visitor {
    std::string operator()(const SrgParams& p) const { return to_string(p); }
    std::string operator()(const NotRegular& w) const {
      return "NotRegular vertex=" + std::to_string(w.vertex) + " degree=" + std::to_string(w.degree) +
             " max_degree=" + std::to_string(w.max_degree);
    }
    std::string operator()(const CodegreeMismatch& w) const {
      return "CodegreeMismatch u=" + std::to_string(w.u) + " v=" + std::to_string(w.v) +
             (w.adjacent ? " adjacent" : " nonadjacent") + " codegree=" + std::to_string(w.codegree) +
             " expected=" + std::to_string(w.expected);
    }
    std::string operator()(const Degenerate& w) const { return "Degenerate reason=" + w.reason; }
  };
  return std::visit(Visitor{}, v.outcome);
}

SrgVerdict verify_srg(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::size_t min_deg = std::numeric_limits<std::size_t>::max();
  std::size_t max_deg = 0;
  Vertex min_vertex = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < min_deg) {
      min_deg = g.degree(u);
      min_vertex = u;
    }
    max_deg = std::max(max_deg, g.degree(u));
  }
  if (min_deg != max_deg) return {NotRegular{min_vertex, min_deg, max_deg}};

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (g.edge_count() == 0) return {Degenerate{"no edges"}};
  if (g.edge_count() == pairs) return {Degenerate{"no non-adjacent pairs"}};

  // Reference values come from the lexicographically first edge / non-edge.
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (Vertex v = 1; v < n && !(lambda && mu); ++v) {
    if (g.adjacent(0, v)) {
      if (!lambda) lambda = pair_codegree(g, 0, v);
    } else if (!mu) {
      mu = pair_codegree(g, 0, v);
    }
  }
  for (Vertex u = 1; u < n && !(lambda && mu); ++u)
    for (Vertex v = u + 1; v < n && !(lambda && mu); ++v) {
      if (g.adjacent(u, v)) {
        if (!lambda) lambda = pair_codegree(g, u, v);
      } else if (!mu) {
        mu = pair_codegree(g, u, v);
      }
    }

  std::vector<FirstMismatch> per_row(n);
  parallel_for(n, [&](std::size_t ui) { per_row[ui] = scan_row(g, static_cast<Vertex>(ui), *lambda, *mu); });
  for (const auto& m : per_row)
    if (m.found) return {CodegreeMismatch{m.u, m.v, m.adjacent, m.codegree, m.adjacent ? *lambda : *mu}};

  return {SrgParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(max_deg),
                    static_cast<std::int64_t>(*lambda), static_cast<std::int64_t>(*mu)}};
}

std::int64_t identity_check(const SrgParams& p) {
  return p.k * (p.k - p.lambda - 1) - (p.n - p.k - 1) * p.mu;
}

SrgParams complement_params(const SrgParams& p) {
  const SrgParams c{p.n, p.n - 1 - p.k, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
  if (c.k < 0) throw std::invalid_argument("complement_params: k' = n-1-k = " + std::to_string(c.k) + " < 0");
  if (c.lambda < 0)
    throw std::invalid_argument("complement_params: lambda' = n-2-2k+mu = " + std::to_string(c.lambda) + " < 0");
  if (c.mu < 0)
    throw std::invalid_argument("complement_params: mu' = n-2k+lambda = " + std::to_string(c.mu) + " < 0");
  return c;
}

bool is_trivial(const SrgParams& p) {
  if (auto why = params_violation(p)) throw std::invalid_argument("is_trivial: " + to_string(p) + ": " + *why);
  return p.mu == 0 || p.n - 2 * p.k + p.lambda == 0;
}

FeasibilityReport eigen_feasibility(const SrgParams& p) {
  if (auto why = params_violation(p))
    throw std::invalid_argument("eigen_feasibility: " + to_string(p) + ": " + *why);
  if (is_trivial(p)) throw std::invalid_argument("eigen_feasibility: " + to_string(p) + " is trivial");

  FeasibilityReport rep;
  rep.params = p;
  const std::int64_t diff = p.lambda - p.mu;
  rep.discriminant = diff * diff + 4 * (p.k - p.mu);
  const std::int64_t twist = 2 * p.k + (p.n - 1) * diff;  // numerator term of f - g
  rep.conference = twist == 0;
  const double root = std::sqrt(static_cast<double>(rep.discriminant));
  rep.r = (static_cast<double>(diff) + root) / 2.0;
  rep.s = (static_cast<double>(diff) - root) / 2.0;

  const std::int64_t sq = isqrt(rep.discriminant);
  rep.integral_eigenvalues = sq * sq == rep.discriminant;

  // f, g = ((n-1) -+ twist / sqrt(disc)) / 2
  if (rep.integral_eigenvalues) {
    const std::int64_t f_num = (p.n - 1) * sq - twist;
    const std::int64_t g_num = (p.n - 1) * sq + twist;
    rep.f = static_cast<double>(f_num) / static_cast<double>(2 * sq);
    rep.g = static_cast<double>(g_num) / static_cast<double>(2 * sq);
    rep.integral_multiplicities = f_num % (2 * sq) == 0 && g_num % (2 * sq) == 0 && f_num >= 0 && g_num >= 0;
    rep.note = rep.integral_multiplicities ? "integral eigenvalues with integral multiplicities"
                                           : "multiplicities are not non-negative integers";
  } else if (rep.conference) {
    rep.f = rep.g = static_cast<double>(p.n - 1) / 2.0;
    rep.integral_multiplicities = (p.n - 1) % 2 == 0;
    rep.note = rep.integral_multiplicities ? "conference graph: multiplicities (n-1)/2"
                                           : "conference graph with even n";
  } else {
    rep.f = (static_cast<double>(p.n - 1) - static_cast<double>(twist) / root) / 2.0;
    rep.g = (static_cast<double>(p.n - 1) + static_cast<double>(twist) / root) / 2.0;
    rep.integral_multiplicities = false;
    rep.note = "irrational eigenvalues outside the conference case";
  }
  rep.feasible = rep.integral_multiplicities;
  return rep;
}

}  // namespace srglab
