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

// Acceptance suite: one PASS/FAIL line per criterion, each with its pinned
// tolerance and runtime limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "srglab/asymptotics.hpp"
#include "srglab/counting.hpp"
#include "srglab/families.hpp"
#include "srglab/instances.hpp"
#include "srglab/regularity.hpp"
#include "srglab/srg.hpp"

using namespace srglab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

Rational q(long long a, long long b) { return Rational(a, b); }

// ---------------------------------------------------------------- criteria

Outcome generator_agreement() {
  Outcome o;
  const std::vector<std::pair<FamilySpec, SrgParams>> cases{
      {{Family::Paley, 13, 0, false}, {13, 6, 2, 3}},
      {{Family::Triangular, 5, 0, false}, {10, 6, 3, 4}},
      {{Family::Triangular, 5, 0, true}, {10, 3, 0, 1}},
      {{Family::Lattice, 4, 0, false}, {16, 6, 2, 2}},
      {{Family::Cliques, 3, 4, false}, {12, 3, 2, 0}},
  };
  for (const auto& [spec, want] : cases) {
    const SrgVerdict v = verify_srg(generate(spec));
    if (!v.is_srg() || !(v.params() == want))
      o.fail(to_string(spec) + " gave " + to_string(v) + ", want " + to_string(want));
  }
  if (o.pass) o.detail = "5/5 exact";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  std::vector<FamilySpec> specs;
  for (std::uint32_t p = 5; p <= 2000; p += 4)
    if (is_prime(p)) specs.push_back({Family::Paley, p, 0, false});
  for (std::uint32_t m = 4; m * (m - 1) / 2 <= 2000; ++m) specs.push_back({Family::Triangular, m, 0, false});
  for (std::uint32_t m = 2; m * m <= 2000; ++m) specs.push_back({Family::Lattice, m, 0, false});
  for (std::uint32_t r = 2; r <= 20; ++r)
    for (std::uint32_t m = 2; m <= 20; m += 3) specs.push_back({Family::Cliques, r, m, false});
  const std::size_t base = specs.size();
  for (std::size_t i = 0; i < base; ++i) {
    auto s = specs[i];
    s.complemented = true;
    specs.push_back(s);
  }
  std::size_t checked = 0;
  for (const auto& s : specs) {
    const SrgVerdict v = verify_srg(generate(s));
    if (!v.is_srg()) {
      o.fail(to_string(s) + " not strongly regular: " + to_string(v));
      continue;
    }
    if (identity_check(v.params()) != 0) o.fail(to_string(s) + " identity residual nonzero");
    ++checked;
  }
  if (checked < 40) o.fail("only " + std::to_string(checked) + " instances");
  if (o.pass) o.detail = std::to_string(checked) + " instances, residual 0";
  return o;
}

Outcome paley_shadow() {
  Outcome o;
  const auto family = parse_sweep_family("paley");
  const auto sizes = parse_sizes("5..1000", family);
  const auto rows = family_sweep(family, sizes);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const long long p = r.params.n;
    if (r.dev_lambda != q(3 * p + 1, 4 * p)) o.fail("dev_lambda mismatch at q=" + std::to_string(p));
    if (r.dev_mu != q(p - 1, 4 * p)) o.fail("dev_mu mismatch at q=" + std::to_string(p));
    if (r.dev_lambda_over_n > q(1, p)) o.fail("dev_lambda/n > 1/q at q=" + std::to_string(p));
    if (r.dev_mu_over_n > q(1, 4 * p)) o.fail("dev_mu/n > 1/(4q) at q=" + std::to_string(p));
    if (i > 0 && !(r.dev_lambda_over_n < rows[i - 1].dev_lambda_over_n && r.dev_mu_over_n < rows[i - 1].dev_mu_over_n))
      o.fail("not strictly decreasing at q=" + std::to_string(p));
  }
  if (o.pass)
    o.detail = std::to_string(rows.size()) + " primes up to " + std::to_string(rows.back().params.n) +
               ", closed forms exact, dev_lambda/n at q=" + std::to_string(rows.back().params.n) + " = " +
               to_decimal(rows.back().dev_lambda_over_n);
  return o;
}

Outcome triangular_shadow() {
  Outcome o;
  const auto family = parse_sweep_family("triangular");
  const auto rows = family_sweep(family, parse_sizes("10..60", family));
  Rational prev = 2, peak = 0;
  long long peak_m = 0;
  bool bound_ok = true;
  for (const auto& r : rows) {
    const long long m = std::stoll(r.param);
    const Rational worst = std::max(r.dev_lambda_over_n, r.dev_mu_over_n);
    if (worst > q(3, m - 1)) {
      bound_ok = false;
      o.fail("m=" + std::to_string(m) + ": " + to_decimal(worst) + " > 3/(m-1)");
    }
    if (!(worst < prev)) o.fail("not decreasing at m=" + std::to_string(m));
    if (worst > peak) {
      peak = worst;
      peak_m = m;
    }
    prev = worst;
  }
  if (rows.size() != 51) o.fail("expected 51 rows, got " + std::to_string(rows.size()));
  if (!o.pass && bound_ok)
    o.detail += " (bound 3/(m-1) holds on all rows; max dev/n peaks at m=" + std::to_string(peak_m) + " = " +
                to_decimal(peak) + ")";
  if (o.pass) o.detail = "m=10..60, max dev/n at m=60 = " + to_decimal(prev);
  return o;
}

Outcome limit_algebra() {
  Outcome o;
  const std::vector<CsrLimits> nontrivial{{q(1, 2), q(1, 4), q(1, 4)}, {0, 0, 0}};
  std::vector<CsrLimits> trivial;
  for (long long r : {2, 3, 5}) trivial.emplace_back(q(1, r), q(1, r), 0);
  auto same = [](const CsrLimits& a, const CsrLimits& b) { return a.d() == b.d() && a.a() == b.a() && a.c() == b.c(); };
  for (const bool is_trivial_group : {false, true}) {
    for (const auto& lim : is_trivial_group ? trivial : nontrivial) {
      if (eq1_residual(lim) != 0) o.fail(to_string(lim) + " residual " + to_decimal(eq1_residual(lim)));
      const CsrLimits c = complement_limits(lim);
      if (!same(complement_limits(c), lim)) o.fail(to_string(lim) + " complement not an involution");
      if (eq1_residual(c) != 0) o.fail(to_string(c) + " complement residual nonzero");
      const bool holds = main_theorem_target(lim).holds;
      if (holds == is_trivial_group) o.fail(to_string(lim) + " target verdict wrong");
    }
  }
  if (o.pass) o.detail = "residuals 0, involution, target holds on 2 nontrivial, fails on 3 trivial";
  return o;
}

Outcome counting_suite() {
  Outcome o;
  const Rational eps(3, 20);
  std::size_t met = 0, reports = 0;
  auto check = [&](const LemmaReport& r, std::uint64_t seed) {
    ++reports;
    if (r.hypothesis == HypothesisStatus::Met) ++met;
    if (!r.acceptable())
      o.fail(r.lemma + " r=" + std::to_string(r.r) + " seed " + std::to_string(seed) + " violated with hypothesis met");
  };
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = random_bipartite(120, 120, 0.5, seed);
    for (unsigned r = 1; r <= 3; ++r) {
      check(xsec_check(inst.graph, inst.A, inst.B, inst.B, eps, r, Tail::Lower), seed);
      check(xsec_check(inst.graph, inst.A, inst.B, inst.B, eps, r, Tail::Upper), seed);
      const auto [i, ii] = xsec2_check(inst.graph, inst.A, inst.B, eps, r);
      check(i, seed);
      check(ii, seed);
    }
    const auto tri = random_tripartite(100, 0.3, 0.7, seed);
    const auto [pi, pii] = xple2_check(tri.graph, tri.A1, tri.A2, tri.B, eps);
    check(pi, seed);
    check(pii, seed);

    MultiOptions opt;
    opt.t = 80;
    opt.p = 5;
    opt.seed = seed;
    const auto dle = random_multi(opt);
    const auto d = dle_check(dle.graph, dle.A1, dle.Bs, dle.S, eps);
    opt.two_sided = true;
    const auto lebs = random_multi(opt);
    const auto l = lebs_check(lebs.graph, lebs.A1, lebs.A2, lebs.Bs, lebs.S, eps);
    for (const auto* r : {&d, &l}) {
      ++reports;
      if (r->hypothesis == HypothesisStatus::Met) ++met;
      if (!r->holds || r->slack <= 0) o.fail(r->lemma + " seed " + std::to_string(seed) + " without positive slack");
    }
  }
  if (o.pass)
    o.detail = std::to_string(reports) + " reports over 20 seeds, " + std::to_string(met) +
               " with hypothesis met, no violation where met; dle/lebs slack > 0";
  return o;
}

// Density of (X, Y) recomputed straight from the adjacency predicate.
Rational plain_density(const Graph& g, const std::vector<Vertex>& X, const std::vector<Vertex>& Y) {
  long long e = 0;
  for (auto x : X)
    for (auto y : Y) e += g.adjacent(x, y);
  return Rational(e, static_cast<long long>(X.size() * Y.size()));
}

Outcome regularity_soundness() {
  Outcome o;
  std::size_t falsified = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = random_block_pair(60 + seed % 7, 50 + seed % 5, 2 + seed % 4, seed);
    const Rational eps(1 + seed % 3, 10);
    const auto v = falsify_uniformity(inst.graph, inst.A, inst.B, eps, 16, seed);
    if (v.status != PairStatus::Falsified) continue;
    ++falsified;
    const auto& w = *v.witness;
    const Rational gap = abs(plain_density(inst.graph, inst.A.members(), inst.B.members()) -
                             plain_density(inst.graph, w.X.members(), w.Y.members()));
    const bool sizes = Rational(static_cast<long long>(w.X.size())) >= eps * static_cast<long long>(inst.A.size()) &&
                       Rational(static_cast<long long>(w.Y.size())) >= eps * static_cast<long long>(inst.B.size());
    if (!sizes || !w.X.subset_of(inst.A) || !w.Y.subset_of(inst.B) || gap < eps)
      o.fail("seed " + std::to_string(seed) + " witness does not re-validate");
  }
  for (std::size_t half : {10u, 25u, 60u}) {
    const auto inst = two_block_pair(half);
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      const auto v = falsify_uniformity(inst.graph, inst.A, inst.B, Rational(1, 10), 1, seed);
      if (v.status != PairStatus::Falsified || v.witness->source != "degree-prefix")
        o.fail("two-block pair half=" + std::to_string(half) + " not falsified by degree prefixes");
    }
  }
  std::size_t extreme_runs = 0;
  for (const auto& inst : {complete_pair(50, 40), empty_pair(50, 40), complete_pair(7, 9), empty_pair(7, 9)}) {
    for (int k = 1; k < 100; ++k) {
      ++extreme_runs;
      if (classify_pair(inst.graph, inst.A, inst.B, Rational(k, 100), 8, static_cast<std::uint64_t>(k)).status ==
          PairStatus::Falsified)
        o.fail("complete/empty pair falsified at eps=" + std::to_string(k) + "/100");
    }
  }
  if (o.pass)
    o.detail = std::to_string(falsified) + "/100 falsified, all witnesses re-validated; two-block deterministic; " +
               std::to_string(extreme_runs) + " complete/empty runs never falsified";
  return o;
}

Outcome density_dichotomy_check() {
  Outcome o;
  const Graph g = disjoint_cliques(4, 50);
  std::vector<std::vector<Vertex>> classes(4);
  for (Vertex v = 0; v < 200; ++v) classes[v / 50].push_back(v);
  const Partition P(200, {}, classes);
  const Rational eps(1, 25);
  const auto rep = verify_partition(g, P, eps, 8, 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Rational d = plain_density(g, classes[i], classes[j]);
      if (d != rep.density(i, j)) o.fail("density mismatch");
      const Rational spread = d - d * d;
      // spread <= sqrt(eps)  <=>  spread^2 <= eps, for spread >= 0
      if (spread < 0 || spread * spread > eps) o.fail("pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (const auto& c : density_dichotomy(rep, eps))
    if (c.cls == DensityClass::Middle || c.spread_ok != true) o.fail("dichotomy classification");
  if (o.pass) o.detail = "6 pairs, d - d^2 = 0 <= 1/5";
  return o;
}

Outcome triviality() {
  Outcome o;
  std::vector<std::string> wrong;
  auto expect = [&](const FamilySpec& s, bool want) {
    const SrgVerdict v = verify_srg(generate(s));
    if (!v.is_srg()) {
      wrong.push_back(to_string(s) + " not SRG");
      return;
    }
    if (is_trivial(v.params()) != want)
      wrong.push_back(to_string(s) + "=" + to_string(v.params()) + (want ? " not trivial" : " trivial"));
  };
  for (std::uint32_t r = 2; r <= 10; ++r)
    for (std::uint32_t m = 2; m <= 10; ++m) {
      expect({Family::Cliques, r, m, false}, true);
      expect({Family::Cliques, r, m, true}, true);
    }
  for (std::uint32_t x = 2; x <= 10; ++x) {
    if (is_prime(x) && x % 4 == 1) expect({Family::Paley, x, 0, false}, false);
    if (x >= 4) expect({Family::Triangular, x, 0, false}, false);
    expect({Family::Lattice, x, 0, false}, false);
  }
  for (const auto& w : wrong) o.fail(w);
  if (o.pass) o.detail = "162 trivial, all paley/triangular/lattice nontrivial";
  return o;
}

Outcome proof_constants_check() {
  Outcome o;
  const auto pc = proof_constants({q(1, 2), q(3, 10), q(1, 5)});
  if (pc.delta != q(1, 10) || pc.epsilon != q(1, 40000) || pc.l != 40000)
    o.fail("got (" + to_decimal(pc.delta) + ", " + to_decimal(pc.epsilon) + ", " + pc.l.str() + ")");
  const std::vector<CsrLimits> bad{{q(1, 2), q(1, 4), q(1, 4)}, {q(3, 5), q(3, 5), q(1, 10)}, {q(3, 5), q(1, 10), q(3, 5)}};
  for (const auto& lim : bad) {
    try {
      proof_constants(lim);
      o.fail(to_string(lim) + " accepted");
    } catch (const std::invalid_argument&) {
    }
  }
  if (o.pass) o.detail = "(1/10, 1/40000, 40000) exact; a=c, d=a, d=c rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "generator/oracle agreement", 1.0, generator_agreement},
      {2, "identity suite", 30.0, identity_suite},
      {3, "finite shadow, paley", 120.0, paley_shadow},
      {4, "finite shadow, triangular", 60.0, triangular_shadow},
      {5, "limit algebra", 1.0, limit_algebra},
      {6, "counting-lemma property suite", 300.0, counting_suite},
      {7, "regularity soundness", 60.0, regularity_soundness},
      {8, "density dichotomy", 10.0, density_dichotomy_check},
      {9, "triviality dichotomy", 10.0, triviality},
      {10, "proof constants", 1.0, proof_constants_check},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      std::ostringstream why;
      why << "runtime " << secs << " s over limit " << c.limit_seconds << " s";
      o.fail(why.str());
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s) [%.2f s / %.0f s]: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
