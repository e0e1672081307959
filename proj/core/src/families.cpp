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

#include "srglab/families.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace srglab {

namespace {

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw std::invalid_argument("invalid family spec '" + std::string(text) + "': " + why +
                              "; expected " + std::string(kFamilyGrammar));
}

std::uint32_t parse_u32(std::string_view tok, std::string_view whole) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) bad_spec(whole, "bad number '" + std::string(tok) + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

Graph paley(std::uint32_t q) {
  if (q > Graph::kMaxVertices) throw std::invalid_argument("paley: q = " + std::to_string(q) + " exceeds vertex cap");
  if (!is_prime(q)) throw std::invalid_argument("paley: q = " + std::to_string(q) + " is not prime");
  if (q % 4 != 1) throw std::invalid_argument("paley: q = " + std::to_string(q) + " is not 1 mod 4");
  std::vector<char> square(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) square[(x * x) % q] = 1;
  GraphBuilder b(q);
  for (std::uint32_t u = 0; u < q; ++u)
    for (std::uint32_t v = u + 1; v < q; ++v)
      if (square[v - u]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph triangular(std::uint32_t m) {
  if (m < 4) throw std::invalid_argument("triangular: m = " + std::to_string(m) + " < 4");
  const std::size_t n = static_cast<std::size_t>(m) * (m - 1) / 2;
  if (n > Graph::kMaxVertices) throw std::invalid_argument("triangular: m = " + std::to_string(m) + " exceeds vertex cap");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(n);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const auto [a, c] = pairs[u];
      const auto [x, y] = pairs[v];
      if (a == x || a == y || c == x || c == y) b.add_edge(u, v);
    }
  return std::move(b).build();
}

Graph lattice(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("lattice: m = " + std::to_string(m) + " < 2");
  const std::size_t n = static_cast<std::size_t>(m) * m;
  if (n > Graph::kMaxVertices) throw std::invalid_argument("lattice: m = " + std::to_string(m) + " exceeds vertex cap");
  GraphBuilder b(n);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      const Vertex u = i * m + j;
      for (std::uint32_t jj = j + 1; jj < m; ++jj) b.add_edge(u, i * m + jj);
      for (std::uint32_t ii = i + 1; ii < m; ++ii) b.add_edge(u, ii * m + j);
    }
  return std::move(b).build();
}

Graph disjoint_cliques(std::uint32_t r, std::uint32_t m) {
  if (r < 1) throw std::invalid_argument("disjoint_cliques: r must be >= 1");
  if (m < 2) throw std::invalid_argument("disjoint_cliques: m = " + std::to_string(m) + " < 2");
  const std::size_t n = static_cast<std::size_t>(r) * m;
  if (n > Graph::kMaxVertices) throw std::invalid_argument("disjoint_cliques: r*m exceeds vertex cap");
  GraphBuilder b(n);
  for (std::uint32_t c = 0; c < r; ++c)
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = i + 1; j < m; ++j) b.add_edge(c * m + i, c * m + j);
  return std::move(b).build();
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Paley: return "paley";
    case Family::Triangular: return "triangular";
    case Family::Lattice: return "lattice";
    case Family::Cliques: return "cliques";
  }
  return "?";
}

FamilySpec parse_family(std::string_view text) {
  FamilySpec spec;
  std::string_view rest = text;
  if (!rest.empty() && rest.front() == '~') {
    spec.complemented = true;
    rest.remove_prefix(1);
  }
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) bad_spec(text, "missing ':'");
  const std::string_view name = rest.substr(0, colon);
  const std::string_view args = rest.substr(colon + 1);
  if (name == "paley") {
    spec.family = Family::Paley;
    spec.a = parse_u32(args, text);
  } else if (name == "triangular") {
    spec.family = Family::Triangular;
    spec.a = parse_u32(args, text);
  } else if (name == "lattice") {
    spec.family = Family::Lattice;
    spec.a = parse_u32(args, text);
  } else if (name == "cliques") {
    spec.family = Family::Cliques;
    const auto x = args.find('x');
    if (x == std::string_view::npos) bad_spec(text, "cliques needs <r>x<m>");
    spec.a = parse_u32(args.substr(0, x), text);
    spec.b = parse_u32(args.substr(x + 1), text);
  } else {
    bad_spec(text, "unknown family '" + std::string(name) + "'");
  }
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    bad_spec(text, e.what());
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string s = spec.complemented ? "~" : "";
  s += family_name(spec.family) + ":" + std::to_string(spec.a);
  if (spec.family == Family::Cliques) s += "x" + std::to_string(spec.b);
  return s;
}

void validate(const FamilySpec& spec) {
  const auto cap = Graph::kMaxVertices;
  const std::uint64_t a = spec.a;
  switch (spec.family) {
    case Family::Paley:
      if (!is_prime(a) || a % 4 != 1) throw std::invalid_argument("paley needs a prime q = 1 mod 4");
      if (a > cap) throw std::invalid_argument("order exceeds vertex cap");
      break;
    case Family::Triangular:
      if (a < 4) throw std::invalid_argument("triangular needs m >= 4");
      if (a * (a - 1) / 2 > cap) throw std::invalid_argument("order exceeds vertex cap");
      break;
    case Family::Lattice:
      if (a < 2) throw std::invalid_argument("lattice needs m >= 2");
      if (a * a > cap) throw std::invalid_argument("order exceeds vertex cap");
      break;
    case Family::Cliques:
      if (a < 1 || spec.b < 2) throw std::invalid_argument("cliques needs r >= 1 and m >= 2");
      if (a * spec.b > cap) throw std::invalid_argument("order exceeds vertex cap");
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  Graph g;
  switch (spec.family) {
    case Family::Paley: g = paley(spec.a); break;
    case Family::Triangular: g = triangular(spec.a); break;
    case Family::Lattice: g = lattice(spec.a); break;
    case Family::Cliques: g = disjoint_cliques(spec.a, spec.b); break;
  }
  return spec.complemented ? complement(g) : g;
}

SrgParams closed_form_params(const FamilySpec& spec) {
  validate(spec);
  const std::int64_t a = spec.a;
  SrgParams p;
  switch (spec.family) {
    case Family::Paley: p = {a, (a - 1) / 2, (a - 5) / 4, (a - 1) / 4}; break;
    case Family::Triangular: p = {a * (a - 1) / 2, 2 * (a - 2), a - 2, 4}; break;
    case Family::Lattice: p = {a * a, 2 * (a - 1), a - 2, 2}; break;
    case Family::Cliques: {
      const std::int64_t m = spec.b;
      p = {m * a, m - 1, m - 2, 0};
      break;
    }
  }
  if (!spec.complemented) return p;
  // Complement parameters written out directly; rK_m with r = 1 has no
  // complement edges, so skip the non-negativity check there.
  return {p.n, p.n - 1 - p.k, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
}

}  // namespace srglab
