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

#include "srglab/asymptotics.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "srglab/parallel.hpp"

namespace srglab {

namespace {

void require_unit(const Rational& x, const char* name) {
  if (x < 0 || x > 1) throw std::invalid_argument(std::string(name) + " = " + to_decimal(x) + " outside [0, 1]");
}

std::uint32_t parse_u32(std::string_view tok, std::string_view whole) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad number '" + std::string(tok) + "' in '" + std::string(whole) + "'");
  return v;
}

Rational ratio_of(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

}  // namespace

CsrLimits::CsrLimits(Rational d, Rational a, Rational c) : d_(std::move(d)), a_(std::move(a)), c_(std::move(c)) {
  require_unit(d_, "d");
  require_unit(a_, "a");
  require_unit(c_, "c");
  if (d_ < a_) throw std::invalid_argument("CSR limits need d >= a");
  if (d_ < c_) throw std::invalid_argument("CSR limits need d >= c");
}

std::string to_string(const CsrLimits& lim) {
  return "CSR(" + lim.d().str() + "," + lim.a().str() + "," + lim.c().str() + ")";
}

Rational eq1_residual(const CsrLimits& lim) {
  return lim.d() * lim.d() - (lim.a() - lim.c()) * lim.d() - lim.c();
}

CsrLimits complement_limits(const CsrLimits& lim) {
  const Rational one = 1;
  Rational d = one - lim.d();
  Rational a = one - 2 * lim.d() + lim.c();
  Rational c = one - 2 * lim.d() + lim.a();
  require_unit(a, "complement a");
  require_unit(c, "complement c");
  return CsrLimits(std::move(d), std::move(a), std::move(c));
}

TargetVerdict main_theorem_target(const CsrLimits& lim) {
  const Rational sq = lim.d() * lim.d();
  TargetVerdict v;
  v.a_gap = abs(lim.a() - sq);
  v.c_gap = abs(lim.c() - sq);
  v.holds = v.a_gap <= kTargetTolerance && v.c_gap <= kTargetTolerance;
  return v;
}

ProofConstants proof_constants(const CsrLimits& lim) {
  const Rational ac = abs(lim.a() - lim.c());
  const Rational da = abs(lim.d() - lim.a());
  const Rational dc = abs(lim.d() - lim.c());
  if (ac == 0) throw std::invalid_argument("proof hypothesis violated: a = c");
  if (da == 0) throw std::invalid_argument("proof hypothesis violated: d = a");
  if (dc == 0) throw std::invalid_argument("proof hypothesis violated: d = c");
  ProofConstants pc;
  pc.delta = std::min({ac, da, dc, Rational(1, 10)});
  const Rational q = pc.delta / 20;
  pc.epsilon = q * q;
  pc.l = ceil(Rational(1) / pc.epsilon);
  return pc;
}

SweepFamily parse_sweep_family(std::string_view text) {
  const std::string_view whole = text;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("invalid sweep family '" + std::string(whole) + "': " + why + "; expected " +
                                 std::string(kSweepGrammar));
  };
  SweepFamily f;
  if (!text.empty() && text.front() == '~') {
    f.complemented = true;
    text.remove_prefix(1);
  }
  if (text == "paley") {
    f.family = Family::Paley;
  } else if (text == "triangular") {
    f.family = Family::Triangular;
  } else if (text == "lattice") {
    f.family = Family::Lattice;
  } else if (text.starts_with("cliques:m=")) {
    f.family = Family::Cliques;
    f.fixed_m = parse_u32(text.substr(10), whole);
    if (*f.fixed_m < 2) throw bad("clique size must be >= 2");
  } else if (text.starts_with("cliques:r=")) {
    f.family = Family::Cliques;
    f.fixed_r = parse_u32(text.substr(10), whole);
    if (*f.fixed_r < 1) throw bad("clique count must be >= 1");
  } else {
    throw bad("unknown family");
  }
  return f;
}

FamilySpec member(const SweepFamily& f, std::uint32_t size) {
  FamilySpec s;
  s.family = f.family;
  s.complemented = f.complemented;
  if (f.family == Family::Cliques) {
    s.a = f.fixed_r ? *f.fixed_r : size;
    s.b = f.fixed_m ? *f.fixed_m : size;
  } else {
    s.a = size;
  }
  return s;
}

bool admissible(const SweepFamily& f, std::uint32_t size) {
  try {
    validate(member(f, size));
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<std::uint32_t> parse_sizes(std::string_view text, const SweepFamily& f) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = parse_u32(item.substr(0, dots), text);
      const auto hi = parse_u32(item.substr(dots + 2), text);
      for (std::uint32_t s = lo; s <= hi; ++s)
        if (admissible(f, s)) out.push_back(s);
    } else {
      const auto s = parse_u32(item, text);
      if (!admissible(f, s))
        throw std::invalid_argument("size " + std::to_string(s) + " is not valid for " + to_string(member(f, s)));
      out.push_back(s);
    }
  }
  return out;
}

DeviationRow deviation_row(const FamilySpec& spec, const SrgParams& p) {
  DeviationRow row;
  row.spec = spec;
  row.param = spec.family == Family::Cliques ? std::to_string(spec.a) + "x" + std::to_string(spec.b)
                                             : std::to_string(spec.a);
  row.params = p;
  const Rational n = ratio_of(p.n, 1);
  const Rational k2n = ratio_of(p.k * p.k, p.n);
  row.k_over_n = ratio_of(p.k, p.n);
  row.lambda_over_n = ratio_of(p.lambda, p.n);
  row.mu_over_n = ratio_of(p.mu, p.n);
  row.dev_lambda = abs(ratio_of(p.lambda, 1) - k2n);
  row.dev_mu = abs(ratio_of(p.mu, 1) - k2n);
  row.dev_lambda_over_n = row.dev_lambda / n;
  row.dev_mu_over_n = row.dev_mu / n;
  return row;
}

std::vector<DeviationRow> family_sweep(const SweepFamily& f, const std::vector<std::uint32_t>& sizes) {
  for (auto s : sizes) {
    try {
      validate(member(f, s));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("sweep size " + std::to_string(s) + ": " + e.what());
    }
  }
  std::vector<DeviationRow> rows(sizes.size());
  // Rows are independent; graphs are built one per row inside the worker.
  parallel_for(sizes.size(), [&](std::size_t i) {
    const FamilySpec spec = member(f, sizes[i]);
    const SrgVerdict v = verify_srg(generate(spec));
    if (!v.is_srg()) throw std::runtime_error(to_string(spec) + " is not strongly regular: " + to_string(v));
    rows[i] = deviation_row(spec, v.params());
  });
  std::stable_sort(rows.begin(), rows.end(), [](const DeviationRow& a, const DeviationRow& b) {
    return a.params.n < b.params.n;
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<DeviationRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << (r.spec.complemented ? "~" : "") << family_name(r.spec.family) << ',' << r.param << ',' << r.params.n
        << ',' << r.params.k << ',' << r.params.lambda << ',' << r.params.mu << ',' << to_decimal(r.k_over_n) << ','
        << to_decimal(r.dev_lambda) << ',' << to_decimal(r.dev_mu) << ',' << to_decimal(r.dev_lambda_over_n) << ','
        << to_decimal(r.dev_mu_over_n) << '\n';
  }
}

namespace {

// Sum over v > u of |n codeg(u, v) - k^2|.
SRGLAB_POPCNT_CLONES
long long row_deviation(const Graph& g, Vertex u, long long kk) {
  const auto n = static_cast<Vertex>(g.order());
  long long acc = 0;
  for (Vertex v = u + 1; v < n; ++v) {
    const long long c = static_cast<long long>(pair_codegree(g, u, v)) * static_cast<long long>(n);
    acc += c >= kk ? c - kk : kk - c;
  }
  return acc;
}

}  // namespace

Rational codegree_deviation(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  const std::size_t k = g.degree(0);
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) != k)
      throw std::invalid_argument("codegree_deviation: graph is not regular (vertex " + std::to_string(u) + ")");
  // |codeg - k^2/n| = |n codeg - k^2| / n; accumulate the integer numerators.
  const auto kk = static_cast<long long>(k * k);
  std::vector<BigInt> per_row(n);
  parallel_for(n, [&](std::size_t ui) { per_row[ui] = row_deviation(g, static_cast<Vertex>(ui), kk); });
  BigInt total = 0;
  for (const auto& x : per_row) total += x;
  const BigInt nn = BigInt(n);
  return Rational(total, nn * nn * nn);
}

}  // namespace srglab
