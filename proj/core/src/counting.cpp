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

#include "srglab/counting.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "srglab/parallel.hpp"

namespace srglab {

namespace {

constexpr std::size_t kUniformityTrials = 8;

Rational big(std::uint64_t v) { return Rational(BigInt(v)); }
Rational big(std::size_t a, std::size_t b) { return Rational(BigInt(a), BigInt(b)); }

BigInt binomial(std::size_t n, unsigned r) {
  if (r > n) return 0;
  BigInt out = 1;
  for (unsigned i = 0; i < r; ++i) {
    out *= static_cast<std::uint64_t>(n - i);
    out /= static_cast<std::uint64_t>(i + 1);
  }
  return out;
}

Rational pow(const Rational& x, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= x;
  return out;
}

void require_pair(const VertexSet& A, const VertexSet& B, const char* what) {
  if (A.empty() || B.empty()) throw std::invalid_argument(std::string(what) + ": sets must be nonempty");
  if (!A.disjoint_from(B)) throw std::invalid_argument(std::string(what) + ": sets must be disjoint");
}

void require_eps(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1), got " + to_decimal(eps));
}

Rational pair_density(const Graph& g, const VertexSet& A, const VertexSet& B) {
  return big(edges_between(g, A, B), A.size() * B.size());
}

void record(UniformitySummary& s, PairStatus st) {
  switch (st) {
    case PairStatus::Certified: ++s.certified; break;
    case PairStatus::Falsified: ++s.falsified; break;
    case PairStatus::Unknown: ++s.unknown; break;
  }
}

UniformitySummary summarize(const Graph& g, const std::vector<std::pair<const VertexSet*, const VertexSet*>>& pairs,
                            const Rational& eps) {
  UniformitySummary s;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    record(s, classify_pair(g, *pairs[k].first, *pairs[k].second, eps, kUniformityTrials, pair_seed(0, k, 0)).status);
  return s;
}

void finish(LemmaReport& rep) {
  if (rep.kind == BoundKind::Below) {
    rep.slack = rep.bound - rep.measured;
    rep.holds = rep.slack > 0;
  } else {
    rep.slack = rep.measured - rep.bound;
    rep.holds = rep.slack >= 0;
  }
  if (rep.uniformity.falsified > 0) {
    rep.hypothesis = HypothesisStatus::Vacuous;
    if (!rep.hypothesis_note.empty()) rep.hypothesis_note += "; ";
    rep.hypothesis_note += std::to_string(rep.uniformity.falsified) + " pair(s) falsified as not eps-uniform";
  }
}

// Counts histogram entries c with pred(c).
template <class Pred>
std::uint64_t count_where(const std::vector<std::uint64_t>& hist, Pred pred) {
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < hist.size(); ++c)
    if (pred(c)) total += hist[c];
  return total;
}

// c > x  <=>  c >= floor(x) + 1 ; c < x  <=>  c <= ceil(x) - 1 (integer c)
BigInt first_above(const Rational& x) { return floor(x) + 1; }
BigInt last_below(const Rational& x) { return ceil(x) - 1; }

bool ge(std::size_t c, const BigInt& v) { return BigInt(c) >= v; }
bool le(std::size_t c, const BigInt& v) { return BigInt(c) <= v; }

std::vector<VertexPair> normalized_set(const std::vector<VertexPair>& S, bool unordered, const char* what) {
  std::vector<VertexPair> out;
  out.reserve(S.size());
  for (auto [u, v] : S) {
    if (unordered && u > v) std::swap(u, v);
    out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument(std::string(what) + ": S contains a repeated pair");
  return out;
}

void require_classes(const std::vector<const VertexSet*>& heads, const std::vector<VertexSet>& Bs, const char* what) {
  if (Bs.empty()) throw std::invalid_argument(std::string(what) + ": need at least one B_i");
  const std::size_t t = heads.front()->size();
  if (t == 0) throw std::invalid_argument(std::string(what) + ": classes must be nonempty");
  std::vector<const VertexSet*> all = heads;
  for (const auto& B : Bs) all.push_back(&B);
  for (const auto* s : all)
    if (s->size() != t)
      throw std::invalid_argument(std::string(what) + ": all classes must have size t = " + std::to_string(t) +
                                  ", found " + std::to_string(s->size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (!all[i]->disjoint_from(*all[j])) throw std::invalid_argument(std::string(what) + ": classes must be disjoint");
}

}  // namespace

std::uint64_t phi(unsigned r) {
  if (r > 20) throw std::invalid_argument("phi: r = " + std::to_string(r) + " outside 0..20");
  // sum_{i<r} r!/i!, each term an integer
  std::uint64_t total = 0;
  for (unsigned i = 0; i < r; ++i) {
    std::uint64_t term = 1;
    for (unsigned j = i + 1; j <= r; ++j) term *= j;
    total += term;
  }
  return total;
}

std::string to_string(HypothesisStatus h) { return h == HypothesisStatus::Met ? "met" : "vacuous"; }

std::vector<std::uint64_t> codegree_histogram(const Graph& g, const VertexSet& A, const VertexSet& Y, unsigned r) {
  if (r < 1 || r > 3) throw std::invalid_argument("codegree_histogram: r must be 1, 2 or 3");
  if (Y.universe() != g.order() || A.universe() != g.order())
    throw std::invalid_argument("codegree_histogram: vertex set does not belong to the graph");
  std::vector<std::uint64_t> hist(Y.size() + 1, 0);
  std::mutex merge;
  const auto& a = A.members();
  const auto ymask = Y.mask();
  parallel_for(a.size(), [&](std::size_t i) {
    std::vector<std::uint64_t> local(hist.size(), 0);
    const auto ri = g.row(a[i]);
    if (r == 1) {
      ++local[popcount_and(ri, ymask)];
    } else {
      std::vector<Word> m(ri.size());
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        const auto rj = g.row(a[j]);
        for (std::size_t w = 0; w < m.size(); ++w) m[w] = ri[w] & rj[w] & ymask[w];
        if (r == 2) {
          std::size_t c = 0;
          for (Word w : m) c += static_cast<std::size_t>(std::popcount(w));
          ++local[c];
        } else {
          for (std::size_t k = j + 1; k < a.size(); ++k) ++local[popcount_and(m, g.row(a[k]))];
        }
      }
    }
    std::lock_guard lock(merge);
    for (std::size_t c = 0; c < hist.size(); ++c) hist[c] += local[c];
  });
  return hist;
}

LemmaReport xsec_check(const Graph& g, const VertexSet& A, const VertexSet& B, const VertexSet& Y,
                       const Rational& eps, unsigned r, Tail tail, const EnumerationBudget& budget) {
  require_pair(A, B, "xsec_check");
  require_eps(eps);
  if (!Y.subset_of(B)) throw std::invalid_argument("xsec_check: Y must be a subset of B");
  if (r < 1 || r > budget.max_r || A.size() > budget.max_set)
    throw std::invalid_argument("xsec_check: enumeration budget exceeded (|A| = " + std::to_string(A.size()) +
                                ", r = " + std::to_string(r) + "; limits |A| <= " + std::to_string(budget.max_set) +
                                ", 1 <= r <= " + std::to_string(budget.max_r) + ")");

  const Rational d = pair_density(g, A, B);
  const Rational base = tail == Tail::Lower ? Rational(d - eps) : Rational(d + eps);
  const Rational y(static_cast<long long>(Y.size()));

  LemmaReport rep;
  rep.lemma = tail == Tail::Lower ? "xsec" : "xsec1";
  rep.epsilon = eps;
  rep.r = r;
  rep.kind = BoundKind::Below;
  const bool hyp = pow(base, r - 1) * y > eps * static_cast<long long>(B.size());
  rep.hypothesis = hyp ? HypothesisStatus::Met : HypothesisStatus::Vacuous;
  if (!hyp) rep.hypothesis_note = tail == Tail::Lower ? "(d-eps)^(r-1)|Y| <= eps|B|" : "(d+eps)^(r-1)|Y| <= eps|B|";
  rep.uniformity = summarize(g, {{&A, &B}}, eps);

  const auto hist = codegree_histogram(g, A, Y, r);
  const Rational threshold = pow(base, r) * y;
  std::uint64_t count = 0;
  if (tail == Tail::Lower) {
    const BigInt top = floor(threshold);
    count = count_where(hist, [&](std::size_t c) { return le(c, top); });
  } else {
    const BigInt bottom = ceil(threshold);
    count = count_where(hist, [&](std::size_t c) { return ge(c, bottom); });
  }
  const BigInt sets = binomial(A.size(), r);
  rep.enumerated = Rational(sets);
  rep.measured = big(count);
  rep.bound = eps * big(phi(r)) * Rational(sets);
  finish(rep);
  return rep;
}

std::pair<LemmaReport, LemmaReport> xsec2_check(const Graph& g, const VertexSet& A, const VertexSet& B,
                                                const Rational& eps, unsigned r, const EnumerationBudget& budget) {
  require_pair(A, B, "xsec2_check");
  require_eps(eps);
  if (r < 1 || r > budget.max_r || A.size() > budget.max_set)
    throw std::invalid_argument("xsec2_check: enumeration budget exceeded (|A| = " + std::to_string(A.size()) +
                                ", r = " + std::to_string(r) + ")");
  const Rational d = pair_density(g, A, B);
  const Rational b(static_cast<long long>(B.size()));
  const Rational centre = pow(d, r) * b;
  const Rational spread = eps * static_cast<long long>(r) * b;
  const auto hist = codegree_histogram(g, A, B, r);
  const BigInt sets = binomial(A.size(), r);
  const UniformitySummary uni = summarize(g, {{&A, &B}}, eps);

  auto make = [&](const char* id, std::uint64_t count) {
    LemmaReport rep;
    rep.lemma = id;
    rep.epsilon = eps;
    rep.r = r;
    rep.kind = BoundKind::AtLeast;
    rep.uniformity = uni;
    rep.enumerated = Rational(sets);
    rep.measured = big(count);
    rep.bound = (Rational(1) - eps * big(phi(r))) * Rational(sets);
    finish(rep);
    return rep;
  };
  const BigInt lo = first_above(centre - spread);
  const BigInt hi = last_below(centre + spread);
  return {make("xsec2.i", count_where(hist, [&](std::size_t c) { return ge(c, lo); })),
          make("xsec2.ii", count_where(hist, [&](std::size_t c) { return le(c, hi); }))};
}

std::pair<LemmaReport, LemmaReport> xple2_check(const Graph& g, const VertexSet& A1, const VertexSet& A2,
                                                const VertexSet& B, const Rational& eps,
                                                const EnumerationBudget& budget) {
  require_pair(A1, B, "xple2_check");
  require_pair(A2, B, "xple2_check");
  require_pair(A1, A2, "xple2_check");
  require_eps(eps);
  if (A1.size() * A2.size() > budget.max_pairs)
    throw std::invalid_argument("xple2_check: enumeration budget exceeded (|A1||A2| = " +
                                std::to_string(A1.size() * A2.size()) + " > " + std::to_string(budget.max_pairs) + ")");
  const Rational d1 = pair_density(g, A1, B);
  const Rational d2 = pair_density(g, A2, B);
  const Rational b(static_cast<long long>(B.size()));

  std::vector<std::uint64_t> hist(B.size() + 1, 0);
  std::mutex merge;
  parallel_for(A1.size(), [&](std::size_t i) {
    std::vector<std::uint64_t> local(hist.size(), 0);
    for (Vertex v : A2) ++local[pair_codegree_in(g, A1[i], v, B)];
    std::lock_guard lock(merge);
    for (std::size_t c = 0; c < hist.size(); ++c) hist[c] += local[c];
  });

  const UniformitySummary uni = summarize(g, {{&A1, &B}, {&A2, &B}}, eps);
  const Rational total = big(A1.size(), 1) * static_cast<long long>(A2.size());
  auto make = [&](const char* id, std::uint64_t count) {
    LemmaReport rep;
    rep.lemma = id;
    rep.epsilon = eps;
    rep.r = 2;
    rep.kind = BoundKind::AtLeast;
    rep.uniformity = uni;
    rep.enumerated = total;
    rep.measured = big(count);
    rep.bound = (Rational(1) - 2 * eps) * total;
    finish(rep);
    return rep;
  };
  const BigInt lo = first_above(d1 * d2 * b - 2 * eps * b);
  const BigInt hi = last_below(d1 * d2 * b + 2 * eps * b);
  return {make("xple2.i", count_where(hist, [&](std::size_t c) { return ge(c, lo); })),
          make("xple2.ii", count_where(hist, [&](std::size_t c) { return le(c, hi); }))};
}

std::uint64_t codegree_sum_by_class(const Graph& g, const std::vector<VertexSet>& Bs,
                                    const std::vector<VertexPair>& S) {
  std::uint64_t total = 0;
  for (const auto& B : Bs)
    for (const auto& [u, v] : S) total += pair_codegree_in(g, u, v, B);
  return total;
}

std::uint64_t codegree_sum_by_pair(const Graph& g, const std::vector<VertexSet>& Bs,
                                   const std::vector<VertexPair>& S) {
  std::vector<Vertex> all;
  for (const auto& B : Bs) all.insert(all.end(), B.begin(), B.end());
  const VertexSet joined(g.order(), std::move(all));
  std::uint64_t total = 0;
  for (const auto& [u, v] : S) total += pair_codegree_in(g, u, v, joined);
  return total;
}

namespace {

LemmaReport finish_sum_lemma(const char* id, const Graph& g, const std::vector<VertexSet>& Bs,
                             const std::vector<VertexPair>& S, std::size_t t, const Rational& target_per_pair,
                             long long constant, const Rational& eps, UniformitySummary uni) {
  const std::uint64_t by_class = codegree_sum_by_class(g, Bs, S);
  const std::uint64_t by_pair = codegree_sum_by_pair(g, Bs, S);
  if (by_class != by_pair) throw std::logic_error(std::string(id) + ": codegree sums disagree");

  const Rational t3 = Rational(static_cast<long long>(t)) * static_cast<long long>(t) * static_cast<long long>(t);
  const Rational s_size(static_cast<long long>(S.size()));
  LemmaReport rep;
  rep.lemma = id;
  rep.epsilon = eps;
  rep.r = 2;
  rep.kind = BoundKind::Below;
  rep.uniformity = uni;
  rep.enumerated = s_size;
  rep.measured = abs(big(by_class) - s_size * target_per_pair);
  rep.bound = constant * static_cast<long long>(Bs.size()) * eps * t3;
  if (!S.empty()) {
    rep.averaged_measured = rep.measured / s_size;
    rep.averaged_bound = rep.bound / s_size;  // (c p eps / alpha) t with alpha = |S| / t^2
  }
  finish(rep);
  return rep;
}

}  // namespace

LemmaReport dle_check(const Graph& g, const VertexSet& A, const std::vector<VertexSet>& Bs,
                      const std::vector<VertexPair>& S, const Rational& eps) {
  require_eps(eps);
  require_classes({&A}, Bs, "dle_check");
  const auto pairs = normalized_set(S, true, "dle_check");
  for (const auto& [u, v] : pairs)
    if (u == v || !A.contains(u) || !A.contains(v))
      throw std::invalid_argument("dle_check: S must consist of 2-subsets of A");
  const std::size_t t = A.size();
  const Rational t_r(static_cast<long long>(t));

  // t * sum_i d_i^2 with d_i = e(A, B_i) / t^2
  Rational squares = 0;
  std::vector<std::pair<const VertexSet*, const VertexSet*>> uni_pairs;
  for (const auto& B : Bs) {
    const Rational d = pair_density(g, A, B);
    squares += d * d;
    uni_pairs.emplace_back(&A, &B);
  }
  return finish_sum_lemma("dle", g, Bs, pairs, t, t_r * squares, 5, eps, summarize(g, uni_pairs, eps));
}

LemmaReport lebs_check(const Graph& g, const VertexSet& A1, const VertexSet& A2, const std::vector<VertexSet>& Bs,
                       const std::vector<VertexPair>& S, const Rational& eps) {
  require_eps(eps);
  require_classes({&A1, &A2}, Bs, "lebs_check");
  const auto pairs = normalized_set(S, false, "lebs_check");
  for (const auto& [u, v] : pairs)
    if (!A1.contains(u) || !A2.contains(v)) throw std::invalid_argument("lebs_check: S must be a subset of A1 x A2");
  const std::size_t t = A1.size();
  const Rational t_r(static_cast<long long>(t));

  Rational products = 0;
  std::vector<std::pair<const VertexSet*, const VertexSet*>> uni_pairs;
  for (const auto& B : Bs) {
    products += pair_density(g, A1, B) * pair_density(g, A2, B);
    uni_pairs.emplace_back(&A1, &B);
    uni_pairs.emplace_back(&A2, &B);
  }
  return finish_sum_lemma("lebs", g, Bs, pairs, t, t_r * products, 6, eps, summarize(g, uni_pairs, eps));
}

}  // namespace srglab
