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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "srglab/edge_list.hpp"
#include "srglab/families.hpp"
#include "srglab/rational.hpp"

namespace fs = std::filesystem;
using srglab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "srglab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("srglab_cli_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen writes the edge list and prints parameters") {
  TempDir tmp;
  auto r = invoke({"gen", "paley:13", "--out", tmp / "p13.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "SR(13,6,2,3)\n");
  CHECK(slurp(tmp / "p13.txt").rfind("13 39\n", 0) == 0);

  r = invoke({"gen", "~triangular:5", "--out", tmp / "petersen.txt"});
  CHECK(r.out == "SR(10,3,0,1)\n");

  r = invoke({"gen", "paley:12", "--out", tmp / "x.txt"});
  CHECK(r.code == 2);
  CHECK(r.err.find("paley:<prime") != std::string::npos);
  CHECK_FALSE(fs::exists(tmp / "x.txt"));
  CHECK(invoke({"gen", "paley:13"}).code == 2);
}

TEST_CASE("verify exit codes") {
  TempDir tmp;
  invoke({"gen", "~triangular:5", "--out", tmp / "petersen.txt"});
  auto r = invoke({"verify", tmp / "petersen.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "SR(10,3,0,1)\n");

  std::ofstream(tmp / "path.txt") << "4 3\n0 1\n1 2\n2 3\n";
  r = invoke({"verify", tmp / "path.txt"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("NotRegular vertex=0", 0) == 0);

  std::ofstream(tmp / "trunc.txt") << "4 3\n0 1\n1 2\n";
  r = invoke({"verify", tmp / "trunc.txt"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);

  CHECK(invoke({"verify", "cliques:3x4"}).out == "SR(12,3,2,0)\n");
  CHECK(invoke({"verify", tmp / "missing.txt"}).code == 2);
}

TEST_CASE("sweep output") {
  TempDir tmp;
  auto r = invoke({"sweep", "paley", "--sizes", "5,13", "--out", tmp / "s.csv"});
  CHECK(r.code == 0);
  const std::string csv = slurp(tmp / "s.csv");
  CHECK(csv.rfind("family,param,n,k,lambda,mu,k_over_n,dev_lambda,dev_mu,dev_lambda_over_n,dev_mu_over_n\n", 0) == 0);
  CHECK(csv.find("paley,13,13,6,2,3,") != std::string::npos);

  r = invoke({"sweep", "triangular"});
  CHECK(r.code == 0);
  CHECK(r.out == "family,param,n,k,lambda,mu,k_over_n,dev_lambda,dev_mu,dev_lambda_over_n,dev_mu_over_n\n");

  r = invoke({"sweep", "lattice", "--sizes", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["n"] == 9);
  CHECK(j["rows"][0]["dev_mu"]["exact"] == "2/9");

  CHECK(invoke({"sweep", "paley", "--sizes", "12"}).code == 2);
  CHECK(invoke({"sweep", "paley", "--format", "xml"}).code == 2);
}

TEST_CASE("lemma reports") {
  auto r = invoke({"lemma", "xsec2", "random:120x120:0.5", "--eps", "0.15", "--r", "2", "--seed", "7"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["seed"] == 7);
  CHECK(j["epsilon"]["exact"] == "3/20");
  CHECK(j["reports"].size() == 2);
  CHECK(j["verdict"] == "holds");

  r = invoke({"lemma", "dle", "random-multi:t=80,p=5", "--eps", "0.1", "--seed", "7"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["reports"][0]["verdict"] == "holds");
  CHECK(srglab::parse_rational(j["reports"][0]["slack"]["exact"].get<std::string>()) > 0);

  r = invoke({"lemma", "xple2", "tripartite:40:0.3,0.7", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("lemma,hypothesis,measured,bound,slack,verdict\nxple2.i,", 0) == 0);

  CHECK(invoke({"lemma", "nope", "random:10x10:0.5"}).code == 2);
  CHECK(invoke({"lemma", "xple2", "random:10x10:0.5"}).code == 2);
  CHECK(invoke({"lemma", "xsec", "random:10x10:0.5", "--eps", "1.5"}).code == 2);
  CHECK(invoke({"lemma", "xsec", "random:400x10:0.5"}).code == 2);  // over budget
}

TEST_CASE("regularity command") {
  TempDir tmp;
  auto r = invoke({"regularity", "cliques:4x50", "--l", "4", "--eps", "0.04", "--out", tmp / "part.txt", "--report",
                   tmp / "rep.json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(tmp / "rep.json"));
  CHECK(j["report"]["condition_i"] == true);
  CHECK(j["report"]["condition_ii"] == true);
  CHECK(j["report"]["dichotomy"]["all_pairs_outside_middle"] == true);
  CHECK(j["report"]["seed"] == 0);
  CHECK(slurp(tmp / "part.txt").rfind("V0:", 0) == 0);

  // Paley pairs are never certified at this scale, but none is falsified either.
  r = invoke({"regularity", "paley:401", "--l", "8", "--eps", "0.25"});
  CHECK(r.code == 0);
  const auto pj = nlohmann::json::parse(r.out);
  CHECK(pj["report"]["verdicts"]["falsified"] == 0);
  CHECK(pj["report"]["p"] == 8);

  CHECK(invoke({"regularity", "cliques:4x50", "--l", "101"}).code == 2);
}

TEST_CASE("feasibility command") {
  auto r = invoke({"feasibility", "10", "3", "0", "1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["f"] == 5.0);
  CHECK(invoke({"feasibility", "15", "7", "2", "4"}).code == 1);
  CHECK(invoke({"feasibility", "10", "3", "0", "2"}).code == 2);
  CHECK(invoke({"feasibility", "10", "3"}).code == 2);
}

TEST_CASE("outputs are byte-identical across runs") {
  TempDir tmp;
  for (int i = 0; i < 2; ++i) {
    invoke({"regularity", "triangular:12", "--l", "3", "--seed", "5", "--report", tmp / ("r" + std::to_string(i))});
    invoke({"lemma", "lebs", "random-multi:t=30,p=3", "--seed", "5", "--out", tmp / ("l" + std::to_string(i))});
  }
  CHECK(slurp(tmp / "r0") == slurp(tmp / "r1"));
  CHECK(slurp(tmp / "l0") == slurp(tmp / "l1"));
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
