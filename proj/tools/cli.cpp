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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "CLI11.hpp"
#include "report.hpp"
#include "srglab/asymptotics.hpp"
#include "srglab/counting.hpp"
#include "srglab/edge_list.hpp"
#include "srglab/families.hpp"
#include "srglab/instances.hpp"
#include "srglab/regularity.hpp"
#include "srglab/srg.hpp"

namespace srglab::cli {

namespace {

using report::Json;

// Usage errors carry exit code 2; everything else thrown by the library is
// also mapped to 2 by run(), but this keeps messages distinguishable.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty())
    out << content;
  else
    write_atomically(cfg.out, content);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rational parse_eps(const std::string& text) {
  Rational eps;
  try {
    eps = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--eps: " + std::string(e.what()));
  }
  if (eps <= 0 || eps >= 1) throw UsageError("--eps must lie in (0, 1), got " + text);
  return eps;
}

double parse_probability(const std::string& text) {
  const Rational p = parse_rational(text);
  if (p < 0 || p > 1) throw UsageError("probability outside [0, 1]: " + text);
  return to_double(p);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

constexpr const char* kInstanceGrammar =
    "random:<a>x<b>:<p> | tripartite:<t>:<p1>,<p2> | random-multi:t=<t>,p=<p>[,d=<d1>/<d2>/...]";

std::size_t parse_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw UsageError("bad size '" + s + "'; expected " + kInstanceGrammar);
  return v;
}

MultiOptions parse_multi(const std::string& args, std::uint64_t seed, bool two_sided) {
  MultiOptions opt;
  opt.seed = seed;
  opt.two_sided = two_sided;
  for (const auto& kv : split(args, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("bad instance field '" + kv + "'; expected " + kInstanceGrammar);
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "t") {
      opt.t = parse_size(val);
    } else if (key == "p") {
      opt.p = parse_size(val);
    } else if (key == "d") {
      opt.densities.clear();
      for (const auto& d : split(val, '/')) opt.densities.push_back(parse_probability(d));
    } else {
      throw UsageError("unknown instance field '" + key + "'; expected " + kInstanceGrammar);
    }
  }
  return opt;
}

std::vector<LemmaReport> run_lemma(const RunConfig& cfg, const Rational& eps) {
  const auto colon = cfg.source.find(':');
  if (colon == std::string::npos) throw UsageError("bad instance '" + cfg.source + "'; expected " + kInstanceGrammar);
  const std::string kind = cfg.source.substr(0, colon);
  const std::string args = cfg.source.substr(colon + 1);
  const std::string& id = cfg.lemma;

  if (id == "xsec" || id == "xsec1" || id == "xsec2") {
    if (kind != "random") throw UsageError(id + " needs a random:<a>x<b>:<p> instance");
    const auto parts = split(args, ':');
    if (parts.size() != 2) throw UsageError("bad instance '" + cfg.source + "'; expected " + kInstanceGrammar);
    const auto x = parts[0].find('x');
    if (x == std::string::npos) throw UsageError("bad instance '" + cfg.source + "'; expected " + kInstanceGrammar);
    const auto inst = random_bipartite(parse_size(parts[0].substr(0, x)), parse_size(parts[0].substr(x + 1)),
                                       parse_probability(parts[1]), cfg.seed);
    if (id == "xsec2") {
      auto [i, ii] = xsec2_check(inst.graph, inst.A, inst.B, eps, cfg.r);
      return {i, ii};
    }
    return {xsec_check(inst.graph, inst.A, inst.B, inst.B, eps, cfg.r, id == "xsec" ? Tail::Lower : Tail::Upper)};
  }
  if (id == "xple2") {
    if (kind != "tripartite") throw UsageError("xple2 needs a tripartite:<t>:<p1>,<p2> instance");
    const auto parts = split(args, ':');
    if (parts.size() != 2) throw UsageError("bad instance '" + cfg.source + "'; expected " + kInstanceGrammar);
    const auto ps = split(parts[1], ',');
    if (ps.size() != 2) throw UsageError("bad instance '" + cfg.source + "'; expected " + kInstanceGrammar);
    const auto inst =
        random_tripartite(parse_size(parts[0]), parse_probability(ps[0]), parse_probability(ps[1]), cfg.seed);
    auto [i, ii] = xple2_check(inst.graph, inst.A1, inst.A2, inst.B, eps);
    return {i, ii};
  }
  if (id == "dle" || id == "lebs") {
    if (kind != "random-multi") throw UsageError(id + " needs a random-multi:t=<t>,p=<p> instance");
    const auto inst = random_multi(parse_multi(args, cfg.seed, id == "lebs"));
    if (id == "dle") return {dle_check(inst.graph, inst.A1, inst.Bs, inst.S, eps)};
    return {lebs_check(inst.graph, inst.A1, inst.A2, inst.Bs, inst.S, eps)};
  }
  throw UsageError("unknown lemma '" + id + "'; expected one of xsec, xsec1, xsec2, xple2, dle, lebs");
}

}  // namespace

Graph load_graph_source(const std::string& source) {
  if (std::filesystem::exists(source)) return load_edge_list(source);
  FamilySpec spec;
  try {
    spec = parse_family(source);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("cannot open '" + source + "' (not a file and not a family spec: " +
                             std::string(kFamilyGrammar) + ")");
  }
  return generate(spec);
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  FamilySpec spec;
  try {
    spec = parse_family(cfg.source);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.out.empty()) throw UsageError("gen needs --out <path>");
  const Graph g = generate(spec);
  std::ostringstream edges;
  write_edge_list(edges, g);
  write_atomically(cfg.out, edges.str());
  const SrgVerdict v = verify_srg(g);
  out << to_string(v) << '\n';
  return v.is_srg() ? kExitOk : kExitPropertyFails;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const Graph g = load_graph_source(cfg.source);
  const SrgVerdict v = verify_srg(g);
  out << to_string(v) << '\n';
  return v.is_srg() ? kExitOk : kExitPropertyFails;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  SweepFamily family;
  std::vector<std::uint32_t> sizes;
  try {
    family = parse_sweep_family(cfg.source);
    sizes = parse_sizes(cfg.sizes, family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto rows = family_sweep(family, sizes);
  std::ostringstream doc;
  if (cfg.format.value_or(Format::Csv) == Format::Csv) {
    write_sweep_csv(doc, rows);
  } else {
    Json j;
    j["command"] = "sweep";
    j["family"] = cfg.source;
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"family", (r.spec.complemented ? "~" : "") + family_name(r.spec.family)},
                     {"param", r.param},
                     {"n", r.params.n},
                     {"k", r.params.k},
                     {"lambda", r.params.lambda},
                     {"mu", r.params.mu},
                     {"k_over_n", report::exact(r.k_over_n)},
                     {"dev_lambda", report::exact(r.dev_lambda)},
                     {"dev_mu", report::exact(r.dev_mu)},
                     {"dev_lambda_over_n", report::exact(r.dev_lambda_over_n)},
                     {"dev_mu_over_n", report::exact(r.dev_mu_over_n)}});
    }
    j["rows"] = std::move(arr);
    doc << dump(j);
  }
  emit(cfg, doc.str(), out);
  return kExitOk;
}

int cmd_lemma(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const Rational eps = parse_eps(cfg.eps);
  const auto reports = run_lemma(cfg, eps);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const LemmaReport& r) { return r.acceptable(); });
  std::ostringstream doc;
  if (cfg.format.value_or(Format::Json) == Format::Csv) {
    doc << "lemma,hypothesis,measured,bound,slack,verdict\n";
    for (const auto& r : reports)
      doc << r.lemma << ',' << to_string(r.hypothesis) << ',' << to_decimal(r.measured) << ',' << to_decimal(r.bound)
          << ',' << to_decimal(r.slack) << ',' << (r.holds ? "holds" : "violated") << '\n';
  } else {
    Json j;
    j["command"] = "lemma";
    j["lemma"] = cfg.lemma;
    j["instance"] = cfg.source;
    j["seed"] = cfg.seed;
    j["epsilon"] = report::exact(eps);
    j["r"] = cfg.r;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report::to_json(r));
    j["reports"] = std::move(arr);
    j["verdict"] = ok ? "holds" : "violated";
    doc << dump(j);
  }
  emit(cfg, doc.str(), out);
  return ok ? kExitOk : kExitPropertyFails;
}

int cmd_regularity(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const Rational eps = parse_eps(cfg.eps);
  const Graph g = load_graph_source(cfg.source);
  if (cfg.classes < 1 || g.order() < 2 * cfg.classes)
    throw UsageError("--l " + std::to_string(cfg.classes) + " needs at least 2l vertices; graph has " +
                     std::to_string(g.order()));
  BuildOptions opt;
  opt.classes = cfg.classes;
  opt.epsilon = eps;
  opt.max_rounds = cfg.rounds;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  const PartitionBuild built = build_partition(g, opt);
  const PartitionReport rep = verify_partition(g, built.partition, eps, cfg.trials, cfg.seed);
  const auto classes = density_dichotomy(rep, eps);

  if (!cfg.out.empty()) {
    std::ostringstream part;
    write_partition(part, built.partition);
    write_atomically(cfg.out, part.str());
  }
  std::ostringstream doc;
  if (cfg.format.value_or(Format::Json) == Format::Csv) {
    doc << "i,j,edges,density,status,class,spread_ok\n";
    for (const auto& c : classes)
      doc << c.i + 1 << ',' << c.j + 1 << ',' << rep.edges[c.i][c.j] << ',' << to_decimal(c.density) << ','
          << to_string(rep.status[c.i][c.j]) << ',' << to_string(c.cls) << ','
          << (c.spread_ok ? (*c.spread_ok ? "yes" : "no") : "-") << '\n';
  } else {
    Json j;
    j["command"] = "regularity";
    j["graph"] = cfg.source;
    j["l"] = cfg.classes;
    j["rounds"] = built.rounds;
    j["converged"] = built.converged;
    j["report"] = report::to_json(rep, classes);
    doc << dump(j);
  }
  if (cfg.report.empty())
    out << doc.str();
  else
    write_atomically(cfg.report, doc.str());
  return rep.condition_i && rep.condition_ii ? kExitOk : kExitPropertyFails;
}

int cmd_feasibility(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  if (cfg.params.size() != 4) throw UsageError("feasibility needs four integers: n k lambda mu");
  const SrgParams p{cfg.params[0], cfg.params[1], cfg.params[2], cfg.params[3]};
  FeasibilityReport rep;
  try {
    rep = eigen_feasibility(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json j = report::to_json(rep);
  j["trivial"] = false;
  emit(cfg, dump(j), out);
  return rep.feasible ? kExitOk : kExitPropertyFails;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"srglab: strongly regular graph, regularity and codegree toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output path (written atomically)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_random = [&](CLI::App* sub) {
    sub->add_option("--eps", cfg.eps, "Epsilon, decimal or fraction")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Random seed (echoed in reports)")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "Random witness trials per pair")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Generate a family member and write its edge list");
  gen->add_option("family", cfg.source, std::string("Family spec: ") + std::string(kFamilyGrammar))->required();
  add_common(gen);

  auto* verify = app.add_subcommand("verify", "Check whether a graph is strongly regular");
  verify->add_option("graph", cfg.source, "Edge-list path or family spec")->required();

  auto* sweep = app.add_subcommand("sweep", "Deviation table |lambda - k^2/n|, |mu - k^2/n| over a family");
  sweep->add_option("family", cfg.source, std::string("Sweep family: ") + std::string(kSweepGrammar))->required();
  sweep->add_option("--sizes", cfg.sizes, "Sizes, e.g. 5,13,17 or 10..60");
  add_common(sweep);

  auto* lemma = app.add_subcommand("lemma", "Exhaustive check of a counting lemma on a seeded instance");
  lemma->add_option("id", cfg.lemma, "xsec | xsec1 | xsec2 | xple2 | dle | lebs")->required();
  lemma->add_option("instance", cfg.source, kInstanceGrammar)->required();
  lemma->add_option("--r", cfg.r, "Set size r")->capture_default_str();
  add_random(lemma);
  add_common(lemma);

  auto* reg = app.add_subcommand("regularity", "Build and verify a uniformity partition");
  reg->add_option("graph", cfg.source, "Edge-list path or family spec")->required();
  reg->add_option("--l", cfg.classes, "Minimum number of classes")->capture_default_str();
  reg->add_option("--rounds", cfg.rounds, "Refinement round cap")->capture_default_str();
  reg->add_option("--report", cfg.report, "Report path (stdout if omitted)");
  add_random(reg);
  add_common(reg);

  auto* feas = app.add_subcommand("feasibility", "Eigenvalue multiplicity check for SRG parameters");
  feas->add_option("params", cfg.params, "n k lambda mu")->expected(4)->required();
  add_common(feas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (format == "csv") cfg.format = Format::Csv;
  if (format == "json") cfg.format = Format::Json;

  try {
    if (gen->parsed()) return cmd_gen(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
    if (lemma->parsed()) return cmd_lemma(cfg, out, err);
    if (reg->parsed()) return cmd_regularity(cfg, out, err);
    if (feas->parsed()) return cmd_feasibility(cfg, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace srglab::cli
