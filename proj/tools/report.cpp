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

#include "report.hpp"

namespace srglab::report {

Json exact(const Rational& x) {
  Json j;
  j["decimal"] = to_decimal(x);
  j["exact"] = x.str();
  return j;
}

Json to_json(const LemmaReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["hypothesis"] = to_string(r.hypothesis);
  if (!r.hypothesis_note.empty()) j["hypothesis_note"] = r.hypothesis_note;
  j["uniformity"] = {{"certified", r.uniformity.certified},
                     {"falsified", r.uniformity.falsified},
                     {"unknown", r.uniformity.unknown}};
  j["epsilon"] = exact(r.epsilon);
  j["r"] = r.r;
  j["enumerated"] = exact(r.enumerated);
  j["measured"] = exact(r.measured);
  j["bound"] = exact(r.bound);
  j["comparison"] = r.kind == BoundKind::Below ? "measured < bound" : "measured >= bound";
  j["slack"] = exact(r.slack);
  if (r.averaged_measured) {
    j["averaged_measured"] = exact(*r.averaged_measured);
    j["averaged_bound"] = exact(*r.averaged_bound);
  }
  j["verdict"] = r.holds ? "holds" : "violated";
  return j;
}

Json to_json(const PairVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["edges"] = v.edges;
  j["density"] = exact(v.density);
  j["epsilon"] = exact(v.epsilon);
  if (v.certificate) {
    j["certificate"] = {{"d1", exact(v.certificate->d1)},
                        {"d2", exact(v.certificate->d2)},
                        {"threshold", exact(v.certificate->threshold)}};
  }
  if (v.witness) {
    j["witness"] = {{"source", v.witness->source},
                    {"X", v.witness->X.members()},
                    {"Y", v.witness->Y.members()},
                    {"density_xy", exact(v.witness->density_xy)},
                    {"gap", exact(v.witness->gap)}};
  }
  return j;
}

Json to_json(const PartitionReport& r, const std::vector<PairDensityClass>& classes) {
  Json j;
  j["seed"] = r.seed;
  j["epsilon"] = exact(r.epsilon);
  j["trials"] = r.trials;
  j["n"] = r.n;
  j["p"] = r.p;
  j["t"] = r.t;
  j["exceptional_size"] = r.exceptional_size;
  j["condition_i"] = r.condition_i;
  j["condition_ii"] = r.condition_ii;
  j["verdicts"] = {{"certified", r.certified}, {"falsified", r.falsified}, {"unknown", r.unknown}};
  j["falsified_per_class"] = r.falsified_per_class;
  Json matrix = Json::array();
  for (std::size_t i = 0; i < r.p; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < r.p; ++k) row.push_back(i == k ? std::string("-") : to_decimal(r.density(i, k)));
    matrix.push_back(std::move(row));
  }
  j["density_matrix"] = std::move(matrix);
  std::size_t low = 0, middle = 0, high = 0, spread_ok = 0;
  for (const auto& c : classes) {
    switch (c.cls) {
      case DensityClass::Low: ++low; break;
      case DensityClass::Middle: ++middle; break;
      case DensityClass::High: ++high; break;
    }
    if (c.spread_ok.value_or(false)) ++spread_ok;
  }
  j["dichotomy"] = {{"low", low},
                    {"middle", middle},
                    {"high", high},
                    {"spread_within_sqrt_eps", spread_ok},
                    {"all_pairs_outside_middle", middle == 0}};
  return j;
}

Json to_json(const FeasibilityReport& r) {
  Json j;
  j["params"] = to_string(r.params);
  j["conference"] = r.conference;
  j["discriminant"] = r.discriminant;
  j["integral_eigenvalues"] = r.integral_eigenvalues;
  j["r"] = r.r;
  j["s"] = r.s;
  j["f"] = r.f;
  j["g"] = r.g;
  j["integral_multiplicities"] = r.integral_multiplicities;
  j["feasible"] = r.feasible;
  j["note"] = r.note;
  return j;
}

}  // namespace srglab::report
