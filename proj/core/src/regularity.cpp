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

#include "srglab/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "srglab/edge_list.hpp"
#include "srglab/parallel.hpp"

namespace srglab {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

BigInt to_bigint(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt lo = static_cast<std::uint64_t>(u);
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

i128 iabs(i128 v) { return v < 0 ? -v : v; }

// eps = num / den as machine integers; eps in (0, 1) keeps both small.
struct EpsFraction {
  std::int64_t num;
  std::int64_t den;
};

EpsFraction eps_fraction(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1), got " + to_decimal(eps));
  const BigInt num = boost::multiprecision::numerator(eps);
  const BigInt den = boost::multiprecision::denominator(eps);
  if (den > BigInt(1'000'000'000'000LL))
    throw std::invalid_argument("epsilon denominator too large: " + to_decimal(eps));
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

std::size_t min_size(const EpsFraction& f, std::size_t size) {
  const i128 need = static_cast<i128>(f.num) * static_cast<i128>(size);
  auto k = static_cast<std::size_t>((need + f.den - 1) / f.den);
  return std::max<std::size_t>(k, 1);
}

std::vector<std::size_t> size_grid(std::size_t lo, std::size_t hi, std::size_t points = 16) {
  std::vector<std::size_t> out;
  if (lo > hi) return out;
  if (hi - lo + 1 <= points) {
    for (std::size_t s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  }
  for (std::size_t i = 0; i < points; ++i) {
    const std::size_t s = lo + static_cast<std::size_t>(std::llround(static_cast<double>(i) *
                                                                      static_cast<double>(hi - lo) /
                                                                      static_cast<double>(points - 1)));
    if (out.empty() || out.back() != s) out.push_back(s);
  }
  return out;
}

std::vector<Word> mask_of(std::size_t n, const std::vector<Vertex>& vs, std::size_t count) {
  std::vector<Word> m(words_for(n), 0);
  for (std::size_t i = 0; i < count; ++i) m[vs[i] / kWordBits] |= Word{1} << (vs[i] % kWordBits);
  return m;
}

// Search context for one pair; every candidate check is exact.
class WitnessSearch {
 public:
  WitnessSearch(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps)
      : g_(g), A_(A), B_(B), eps_(eps_fraction(eps)) {
    edges_ab_ = edges_between(g, A, B);
    kA_ = min_size(eps_, A.size());
    kB_ = min_size(eps_, B.size());
  }

  std::size_t edges_ab() const { return edges_ab_; }

  bool violates(std::size_t x, std::size_t y, std::size_t e_xy) const {
    const i128 a = static_cast<i128>(A_.size());
    const i128 b = static_cast<i128>(B_.size());
    const i128 lhs = iabs(static_cast<i128>(edges_ab_) * x * y - static_cast<i128>(e_xy) * a * b) * eps_.den;
    const i128 rhs = static_cast<i128>(eps_.num) * a * b * static_cast<i128>(x) * static_cast<i128>(y);
    return lhs >= rhs;
  }

  // X = first sx of `xs` (sx from grid), Y = first sy of `ys` (sy from grid).
  std::optional<UniformityWitness> scan_prefixes(const std::vector<Vertex>& xs, const std::vector<Vertex>& ys,
                                                 const std::vector<std::size_t>& gx,
                                                 const std::vector<std::size_t>& gy, const char* source) const {
    for (std::size_t sy : gy) {
      const auto ymask = mask_of(g_.order(), ys, sy);
      std::size_t e = 0;
      std::size_t next = 0;
      for (std::size_t i = 0; i < xs.size() && next < gx.size(); ++i) {
        e += popcount_and(g_.row(xs[i]), ymask);
        if (i + 1 == gx[next]) {
          if (violates(i + 1, sy, e)) return make(xs, i + 1, ys, sy, e, source);
          ++next;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<UniformityWitness> degree_prefixes() const {
    auto xs_desc = sorted_by_degree(A_.members(), B_.mask(), true);
    auto ys_desc = sorted_by_degree(B_.members(), A_.mask(), true);
    std::vector<Vertex> xs_asc(xs_desc.rbegin(), xs_desc.rend());
    std::vector<Vertex> ys_asc(ys_desc.rbegin(), ys_desc.rend());
    const auto gx = size_grid(kA_, A_.size());
    const auto gy = size_grid(kB_, B_.size());
    for (const auto* xs : {&xs_desc, &xs_asc})
      for (const auto* ys : {&ys_desc, &ys_asc})
        if (auto w = scan_prefixes(*xs, *ys, gx, gy, "degree-prefix")) return w;
    return std::nullopt;
  }

  std::optional<UniformityWitness> neighborhoods(std::size_t max_seeds = 32) const {
    // Seeds from B fix X = Gamma(y0) & A (or its complement in A) and scan
    // B sorted by degree into X; seeds from A are symmetric.
    if (auto w = seeded_side(B_, A_, kA_, kB_, false, max_seeds)) return w;
    return seeded_side(A_, B_, kB_, kA_, true, max_seeds);
  }

  std::optional<UniformityWitness> random_subsets(std::size_t trials, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> xs = A_.members();
    std::vector<Vertex> ys = B_.members();
    std::uniform_int_distribution<std::size_t> size_x(kA_, A_.size());
    std::uniform_int_distribution<std::size_t> size_y(kB_, B_.size());
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const std::size_t sx = size_x(rng);
      const std::size_t sy = size_y(rng);
      partial_shuffle(xs, sx, rng);
      partial_shuffle(ys, sy, rng);
      const auto ymask = mask_of(g_.order(), ys, sy);
      std::size_t e = 0;
      for (std::size_t i = 0; i < sx; ++i) e += popcount_and(g_.row(xs[i]), ymask);
      if (violates(sx, sy, e)) return make(xs, sx, ys, sy, e, "random");
    }
    return std::nullopt;
  }

 private:
  static void partial_shuffle(std::vector<Vertex>& v, std::size_t k, std::mt19937_64& rng) {
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, v.size() - 1);
      std::swap(v[i], v[pick(rng)]);
    }
  }

  std::vector<Vertex> sorted_by_degree(const std::vector<Vertex>& vs, std::span<const Word> into,
                                       bool descending) const {
    std::vector<std::pair<std::size_t, Vertex>> keyed;
    keyed.reserve(vs.size());
    for (Vertex v : vs) keyed.emplace_back(popcount_and(g_.row(v), into), v);
    std::stable_sort(keyed.begin(), keyed.end(), [descending](const auto& a, const auto& b) {
      return descending ? a.first > b.first : a.first < b.first;
    });
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (const auto& kv : keyed) out.push_back(kv.second);
    return out;
  }

  // seed_side supplies seed vertices; the fixed set lives on fixed_side.
  std::optional<UniformityWitness> seeded_side(const VertexSet& seed_side, const VertexSet& fixed_side,
                                               std::size_t k_fixed, std::size_t k_scan, bool fixed_is_b,
                                               std::size_t max_seeds) const {
    const std::size_t count = std::min(max_seeds, seed_side.size());
    const auto grid = size_grid(k_scan, seed_side.size());
    for (std::size_t s = 0; s < count; ++s) {
      const Vertex seed_vertex = seed_side[s * seed_side.size() / count];
      std::vector<Vertex> in;
      std::vector<Vertex> out;
      for (Vertex v : fixed_side) (g_.adjacent(seed_vertex, v) ? in : out).push_back(v);
      for (const auto* fixed : {&in, &out}) {
        if (fixed->size() < k_fixed) continue;
        const auto fixed_mask = mask_of(g_.order(), *fixed, fixed->size());
        for (bool desc : {true, false}) {
          const auto scan = sorted_by_degree(seed_side.members(), fixed_mask, desc);
          std::size_t e = 0;
          std::size_t next = 0;
          for (std::size_t i = 0; i < scan.size() && next < grid.size(); ++i) {
            e += popcount_and(g_.row(scan[i]), fixed_mask);
            if (i + 1 == grid[next]) {
              const bool bad = fixed_is_b ? violates(i + 1, fixed->size(), e) : violates(fixed->size(), i + 1, e);
              if (bad) {
                return fixed_is_b ? make(scan, i + 1, *fixed, fixed->size(), e, "neighborhood")
                                  : make(*fixed, fixed->size(), scan, i + 1, e, "neighborhood");
              }
              ++next;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  UniformityWitness make(const std::vector<Vertex>& xs, std::size_t sx, const std::vector<Vertex>& ys,
                         std::size_t sy, std::size_t e_xy, const char* source) const {
    UniformityWitness w;
    w.X = VertexSet(g_.order(), std::vector<Vertex>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(sx)));
    w.Y = VertexSet(g_.order(), std::vector<Vertex>(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(sy)));
    w.edges_xy = e_xy;
    w.density_xy = Rational(static_cast<long long>(e_xy), static_cast<long long>(sx * sy));
    const Rational d_ab(static_cast<long long>(edges_ab_), static_cast<long long>(A_.size() * B_.size()));
    w.gap = abs(d_ab - w.density_xy);
    w.source = source;
    return w;
  }

  const Graph& g_;
  const VertexSet& A_;
  const VertexSet& B_;
  EpsFraction eps_;
  std::size_t edges_ab_ = 0;
  std::size_t kA_ = 1;
  std::size_t kB_ = 1;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string to_string(PairStatus s) {
  switch (s) {
    case PairStatus::Certified: return "certified";
    case PairStatus::Falsified: return "falsified";
    case PairStatus::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(DensityClass c) {
  switch (c) {
    case DensityClass::Low: return "low";
    case DensityClass::Middle: return "middle";
    case DensityClass::High: return "high";
  }
  return "?";
}

std::uint64_t pair_seed(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
  return splitmix64(splitmix64(splitmix64(seed) ^ i) ^ (j * 0x632be59bd9b4e019ULL));
}

PairVerdict falsify_uniformity(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps,
                               std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("falsify_uniformity: trials must be >= 1");
  WitnessSearch search(g, A, B, eps);
  PairVerdict v;
  v.edges = search.edges_ab();
  v.density = Rational(static_cast<long long>(v.edges), static_cast<long long>(A.size() * B.size()));
  v.epsilon = eps;
  std::optional<UniformityWitness> w = search.degree_prefixes();
  if (!w) w = search.neighborhoods();
  if (!w) w = search.random_subsets(trials, seed);
  if (w) {
    v.status = PairStatus::Falsified;
    v.witness = std::move(w);
  }
  return v;
}

PairVerdict certify_uniformity(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps,
                               const CertifyOptions& options) {
  eps_fraction(eps);
  const std::size_t e = edges_between(g, A, B);
  const i128 a = static_cast<i128>(A.size());
  const i128 b = static_cast<i128>(B.size());

  i128 dev1 = 0;
  for (Vertex u : A) dev1 += iabs(static_cast<i128>(popcount_and(g.row(u), B.mask())) * a - static_cast<i128>(e));

  const auto& members = A.members();
  std::vector<i128> row_dev(members.size(), 0);
  const i128 scale = a * a * b;
  const i128 target = static_cast<i128>(e) * static_cast<i128>(e);
  parallel_for(members.size(), [&](std::size_t i) {
    i128 acc = 0;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto c = static_cast<i128>(pair_codegree_in(g, members[i], members[j], B));
      acc += iabs(c * scale - target);
    }
    row_dev[i] = acc;
  });
  i128 dev2 = 0;
  for (i128 x : row_dev) dev2 += 2 * x;  // ordered pairs

  CertificateStats stats;
  stats.d1 = Rational(to_bigint(dev1), to_bigint(a * a * b));
  stats.d2 = Rational(to_bigint(dev2), to_bigint(a * a * a * a * b * b));
  stats.threshold = options.threshold.value_or(eps * eps * eps);

  PairVerdict v;
  v.edges = e;
  v.density = Rational(static_cast<long long>(e), static_cast<long long>(A.size() * B.size()));
  v.epsilon = eps;
  v.status = (stats.d1 <= stats.threshold && stats.d2 <= stats.threshold) ? PairStatus::Certified
                                                                          : PairStatus::Unknown;
  v.certificate = std::move(stats);
  return v;
}

PairVerdict classify_pair(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps,
                          std::size_t trials, std::uint64_t seed) {
  PairVerdict cert = certify_uniformity(g, A, B, eps);
  if (cert.status == PairStatus::Certified) return cert;
  PairVerdict f = falsify_uniformity(g, A, B, eps, trials, seed);
  f.certificate = std::move(cert.certificate);
  return f;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::size_t n, std::vector<Vertex> exceptional, std::vector<std::vector<Vertex>> classes)
    : n_(n), exceptional_(std::move(exceptional)), classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("partition needs at least one class");
  std::vector<char> seen(n_, 0);
  auto mark = [&](Vertex v) {
    if (v >= n_) throw std::invalid_argument("partition vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("partition vertex " + std::to_string(v) + " appears twice");
    seen[v] = 1;
  };
  std::sort(exceptional_.begin(), exceptional_.end());
  for (Vertex v : exceptional_) mark(v);
  const std::size_t t = classes_.front().size();
  if (t == 0) throw std::invalid_argument("partition classes must be nonempty");
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].size() != t)
      throw std::invalid_argument("class V" + std::to_string(i + 1) + " has size " +
                                  std::to_string(classes_[i].size()) + ", expected " + std::to_string(t));
    std::sort(classes_[i].begin(), classes_[i].end());
    for (Vertex v : classes_[i]) mark(v);
  }
  for (std::size_t v = 0; v < n_; ++v)
    if (!seen[v]) throw std::invalid_argument("partition misses vertex " + std::to_string(v));
}

void write_partition(std::ostream& out, const Partition& p) {
  out << "V0:";
  for (Vertex v : p.exceptional()) out << ' ' << v;
  out << '\n';
  for (std::size_t i = 0; i < p.class_count(); ++i) {
    out << 'V' << (i + 1) << ':';
    for (Vertex v : p.classes()[i]) out << ' ' << v;
    out << '\n';
  }
}

Partition read_partition(std::istream& in, std::size_t n) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t expect = 0;
  std::vector<Vertex> exceptional;
  std::vector<std::vector<Vertex>> classes;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (line.front() != 'V' || colon == std::string::npos) throw ParseError(line_no, "expected 'Vi: ...'");
    std::size_t index = 0;
    try {
      index = std::stoul(line.substr(1, colon - 1));
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad class label '" + line.substr(0, colon) + "'");
    }
    if (index != expect) throw ParseError(line_no, "expected class V" + std::to_string(expect));
    ++expect;
    std::istringstream ss(line.substr(colon + 1));
    std::vector<Vertex> members;
    std::string tok;
    while (ss >> tok) {
      try {
        members.push_back(static_cast<Vertex>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad vertex '" + tok + "'");
      }
    }
    if (index == 0)
      exceptional = std::move(members);
    else
      classes.push_back(std::move(members));
  }
  try {
    return Partition(n, std::move(exceptional), std::move(classes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

// ----------------------------------------------------------- build_partition

namespace {

struct Part {
  std::vector<Vertex> members;
};

double internal_density(const Graph& g, const std::vector<Vertex>& p) {
  if (p.size() < 2) return 0.0;
  const auto set = VertexSet(g.order(), p);
  const double e = static_cast<double>(induced_edge_count(g, set));
  return 2.0 * e / (static_cast<double>(p.size()) * static_cast<double>(p.size() - 1));
}

// Groups parts whose density profiles agree within eps.
std::vector<std::vector<Vertex>> merge_similar(const Graph& g, std::vector<std::vector<Vertex>> parts, double eps) {
  const std::size_t m = parts.size();
  std::vector<VertexSet> sets;
  sets.reserve(m);
  for (const auto& p : parts) sets.emplace_back(g.order(), p);
  std::vector<double> inner(m);
  for (std::size_t i = 0; i < m; ++i) inner[i] = internal_density(g, parts[i]);
  std::vector<std::vector<double>> cross(m, std::vector<double>(m, 0.0));
  parallel_for(m, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) cross[i][j] = density(g, sets[i], sets[j]);
  });

  std::vector<std::size_t> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (parts[i].size() < 2) continue;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (parts[j].size() < 2) continue;
      if (std::abs(cross[i][j] - inner[i]) >= eps || std::abs(cross[i][j] - inner[j]) >= eps) continue;
      bool same = true;
      for (std::size_t r = 0; r < m && same; ++r)
        if (r != i && r != j) same = std::abs(cross[i][r] - cross[j][r]) < eps;
      if (same) root[find(j)] = find(i);
    }
  }
  std::map<std::size_t, std::vector<Vertex>> groups;
  for (std::size_t i = 0; i < m; ++i) {
    auto& dst = groups[find(i)];
    dst.insert(dst.end(), parts[i].begin(), parts[i].end());
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& [r, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// Moves each loose vertex into the part whose density profile it matches
// within eps: its density to that part must be close to the part's inner
// density, and its density to every other part close to the cross density.
// Vertices with no match come back as singletons.
std::vector<std::vector<Vertex>> absorb(const Graph& g, std::vector<std::vector<Vertex>> parts,
                                        std::vector<Vertex> loose, double eps) {
  std::vector<std::vector<Vertex>> anchors;
  for (auto& p : parts) {
    if (p.size() >= 2)
      anchors.push_back(std::move(p));
    else
      loose.insert(loose.end(), p.begin(), p.end());
  }
  const std::size_t m = anchors.size();
  std::vector<VertexSet> sets;
  for (const auto& a : anchors) sets.emplace_back(g.order(), a);
  std::vector<std::vector<double>> profile(m, std::vector<double>(m, 0.0));
  parallel_for(m, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j)
      profile[i][j] = i == j ? internal_density(g, anchors[i]) : density(g, sets[i], sets[j]);
  });

  std::vector<std::ptrdiff_t> target(loose.size(), -1);
  parallel_for(loose.size(), [&](std::size_t k) {
    std::vector<double> mine(m);
    for (std::size_t j = 0; j < m; ++j)
      mine[j] = static_cast<double>(degree_in(g, loose[k], sets[j])) / static_cast<double>(anchors[j].size());
    double best = eps;
    for (std::size_t i = 0; i < m; ++i) {
      double worst = 0.0;
      for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, std::abs(mine[j] - profile[i][j]));
      if (worst < best) {
        best = worst;
        target[k] = static_cast<std::ptrdiff_t>(i);
      }
    }
  });
  std::vector<std::vector<Vertex>> out = std::move(anchors);
  // Unmatched vertices are grouped with the first seed whose neighbourhood
  // differs from theirs in fewer than eps n places.
  const std::size_t first_new = out.size();
  const double limit = eps * static_cast<double>(g.order());
  for (std::size_t k = 0; k < loose.size(); ++k) {
    const Vertex v = loose[k];
    if (target[k] >= 0) {
      out[static_cast<std::size_t>(target[k])].push_back(v);
      continue;
    }
    bool placed = false;
    for (std::size_t i = first_new; i < out.size() && !placed; ++i) {
      const Vertex seed = out[i].front();
      std::size_t diff = 0;
      const auto a = g.row(v), b = g.row(seed);
      for (std::size_t w = 0; w < a.size(); ++w) diff += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
      if (g.adjacent(v, seed)) diff -= 2;  // each is in the other's neighbourhood
      if (static_cast<double>(diff) < limit) {
        out[i].push_back(v);
        placed = true;
      }
    }
    if (!placed) out.push_back({v});
  }
  for (auto& p : out) std::sort(p.begin(), p.end());
  return out;
}

// Picks the class size covering the most vertices with at least l classes;
// ties go to the larger size. Returns nullopt if no size >= 2 works.
std::optional<Partition> equalize(std::size_t n, std::vector<std::vector<Vertex>> parts, std::size_t l) {
  std::size_t largest = 0;
  for (const auto& p : parts) largest = std::max(largest, p.size());
  std::size_t best_t = 0;
  std::size_t best_cover = 0;
  for (std::size_t t = 2; t <= largest; ++t) {
    std::size_t count = 0;
    for (const auto& p : parts) count += p.size() / t;
    if (count < l) continue;
    const std::size_t cover = count * t;
    if (cover >= best_cover) {
      best_cover = cover;
      best_t = t;
    }
  }
  if (best_t == 0) return std::nullopt;
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<Vertex> exceptional;
  std::vector<std::vector<Vertex>> classes;
  for (const auto& p : parts) {
    const std::size_t full = p.size() / best_t;
    for (std::size_t c = 0; c < full; ++c)
      classes.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(c * best_t),
                           p.begin() + static_cast<std::ptrdiff_t>((c + 1) * best_t));
    exceptional.insert(exceptional.end(), p.begin() + static_cast<std::ptrdiff_t>(full * best_t), p.end());
  }
  return Partition(n, std::move(exceptional), std::move(classes));
}

}  // namespace

PartitionBuild build_partition(const Graph& g, const BuildOptions& opt) {
  const std::size_t n = g.order();
  const std::size_t l = opt.classes;
  if (l < 1) throw std::invalid_argument("build_partition: l must be >= 1");
  if (n < 2 * l)
    throw std::invalid_argument("build_partition: n = " + std::to_string(n) + " is too small for " +
                                std::to_string(l) + " classes of size >= 2");
  eps_fraction(opt.epsilon);
  const double eps = to_double(opt.epsilon);
  const std::size_t min_t =
      std::min(static_cast<std::size_t>(ceil(Rational(1) / opt.epsilon)), n / l);

  std::mt19937_64 rng(opt.seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t t = n / l;
  std::vector<std::vector<Vertex>> classes(l);
  for (std::size_t i = 0; i < l; ++i)
    classes[i].assign(order.begin() + static_cast<std::ptrdiff_t>(i * t),
                      order.begin() + static_cast<std::ptrdiff_t>((i + 1) * t));
  std::vector<Vertex> rest(order.begin() + static_cast<std::ptrdiff_t>(l * t), order.end());

  PartitionBuild result;
  result.partition = Partition(n, std::move(rest), std::move(classes));

  // Refinement can make things worse on quasi-random inputs, so the best
  // partition seen is what gets returned. Classes smaller than 1/eps rank
  // last (single vertices would already be witness sets), then condition
  // (i), the share of falsified pairs, |V_0|, and larger classes first.
  using Score = std::tuple<bool, bool, double, std::size_t, std::size_t>;
  std::optional<Score> best_score;
  PartitionBuild best;

  constexpr std::size_t kMaxWitnessesPerClass = 3;
  for (std::size_t round = 1; round <= opt.max_rounds; ++round) {
    result.rounds = round;
    const Partition& cur = result.partition;
    const std::size_t p = cur.class_count();
    std::vector<VertexSet> sets;
    for (std::size_t i = 0; i < p; ++i) sets.push_back(cur.class_set(i));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
    std::vector<std::optional<UniformityWitness>> found(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
      const auto [i, j] = pairs[k];
      auto v = falsify_uniformity(g, sets[i], sets[j], opt.epsilon, opt.trials,
                                  pair_seed(opt.seed ^ round, i, j));
      if (v.status == PairStatus::Falsified) found[k] = std::move(v.witness);
    });

    // Witness sets cut each class, in pair order.
    std::vector<std::vector<const VertexSet*>> cuts(p);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!found[k]) continue;
      const auto [i, j] = pairs[k];
      if (cuts[i].size() < kMaxWitnessesPerClass) cuts[i].push_back(&found[k]->X);
      if (cuts[j].size() < kMaxWitnessesPerClass) cuts[j].push_back(&found[k]->Y);
    }
    const bool any = std::any_of(found.begin(), found.end(), [](const auto& w) { return w.has_value(); });
    const auto hits = static_cast<std::size_t>(std::count_if(found.begin(), found.end(), [](const auto& w) { return w.has_value(); }));
    const Score score{cur.class_size() < min_t, !(Rational(static_cast<long long>(cur.exceptional().size())) <
                        opt.epsilon * static_cast<long long>(n)),
                      pairs.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(pairs.size()),
                      cur.exceptional().size(), n - cur.class_size()};
    if (!best_score || score < *best_score) {
      best_score = score;
      best = result;
      best.converged = !any;
    }
    if (!any) {
      result.converged = true;
      // One absorption pass for V_0; kept only if it shrinks V_0, and then
      // re-checked by the next round.
      if (cur.exceptional().empty()) break;
      auto next = equalize(n, absorb(g, cur.classes(), cur.exceptional(), eps), l);
      if (!next || next->exceptional().size() >= cur.exceptional().size()) break;
      result.partition = std::move(*next);
      result.converged = false;
      continue;
    }

    std::vector<std::vector<Vertex>> parts;
    for (std::size_t i = 0; i < p; ++i) {
      std::map<unsigned, std::vector<Vertex>> atoms;
      for (Vertex v : cur.classes()[i]) {
        unsigned code = 0;
        for (std::size_t c = 0; c < cuts[i].size(); ++c)
          if (cuts[i][c]->contains(v)) code |= 1U << c;
        atoms[code].push_back(v);
      }
      for (auto& [code, members] : atoms) parts.push_back(std::move(members));
    }
    auto merged = absorb(g, merge_similar(g, std::move(parts), eps), cur.exceptional(), eps);
    auto next = equalize(n, std::move(merged), l);
    if (!next || *next == cur) break;
    result.partition = std::move(*next);
  }
  return best_score ? best : result;
}

// ---------------------------------------------------------- verify_partition

PartitionReport verify_partition(const Graph& g, const Partition& P, const Rational& eps, std::size_t trials,
                                 std::uint64_t seed) {
  if (P.order() != g.order()) throw std::invalid_argument("verify_partition: partition order does not match graph");
  eps_fraction(eps);
  PartitionReport rep;
  rep.epsilon = eps;
  rep.seed = seed;
  rep.trials = trials;
  rep.n = g.order();
  rep.p = P.class_count();
  rep.t = P.class_size();
  rep.exceptional_size = P.exceptional().size();
  rep.condition_i = Rational(static_cast<long long>(rep.exceptional_size)) < eps * static_cast<long long>(rep.n);

  const std::size_t p = rep.p;
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < p; ++i) sets.push_back(P.class_set(i));
  rep.edges.assign(p, std::vector<std::size_t>(p, 0));
  rep.status.assign(p, std::vector<PairStatus>(p, PairStatus::Unknown));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
  std::vector<PairVerdict> verdicts(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    verdicts[k] = classify_pair(g, sets[i], sets[j], eps, trials, pair_seed(seed, i, j));
  });
  for (std::size_t i = 0; i < p; ++i) rep.edges[i][i] = induced_edge_count(g, sets[i]);
  rep.falsified_per_class.assign(p, 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    rep.edges[i][j] = rep.edges[j][i] = verdicts[k].edges;
    rep.status[i][j] = rep.status[j][i] = verdicts[k].status;
    switch (verdicts[k].status) {
      case PairStatus::Certified: ++rep.certified; break;
      case PairStatus::Unknown: ++rep.unknown; break;
      case PairStatus::Falsified:
        ++rep.falsified;
        ++rep.falsified_per_class[i];
        ++rep.falsified_per_class[j];
        break;
    }
  }
  const Rational allowed = eps * static_cast<long long>(p);
  rep.condition_ii = std::all_of(rep.falsified_per_class.begin(), rep.falsified_per_class.end(),
                                 [&](std::size_t c) { return Rational(static_cast<long long>(c)) <= allowed; });
  return rep;
}

// -------------------------------------------------------- density dichotomy

DensityClass classify_density(const Rational& d, const Rational& eps) {
  // d <= sqrt(eps)  <=>  d^2 <= eps  (d >= 0); likewise for 1 - d.
  if (d < 0 || d > 1) throw std::invalid_argument("density outside [0, 1]: " + to_decimal(d));
  if (d * d <= eps) return DensityClass::Low;
  const Rational gap = Rational(1) - d;
  if (gap * gap <= eps) return DensityClass::High;
  return DensityClass::Middle;
}

bool spread_within(const Rational& d, const Rational& eps) {
  const Rational s = d - d * d;
  return s >= 0 && s * s <= eps;
}

std::vector<PairDensityClass> density_dichotomy(const PartitionReport& report, const Rational& eps) {
  std::vector<PairDensityClass> out;
  for (std::size_t i = 0; i < report.p; ++i)
    for (std::size_t j = i + 1; j < report.p; ++j) {
      PairDensityClass c;
      c.i = i;
      c.j = j;
      c.density = report.density(i, j);
      c.cls = classify_density(c.density, eps);
      c.spread = c.density - c.density * c.density;
      if (c.cls != DensityClass::Middle) c.spread_ok = spread_within(c.density, eps);
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace srglab
