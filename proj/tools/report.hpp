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

#include <string>
#include <vector>

#include "json.hpp"
#include "srglab/counting.hpp"
#include "srglab/regularity.hpp"
#include "srglab/srg.hpp"

namespace srglab::report {

using Json = nlohmann::ordered_json;

// Exact values are written as decimal strings (12 significant digits) next
// to the exact fraction, so documents stay diffable and lossless.
Json exact(const Rational& x);

Json to_json(const LemmaReport& r);
Json to_json(const PairVerdict& v);
Json to_json(const PartitionReport& r, const std::vector<PairDensityClass>& classes);
Json to_json(const FeasibilityReport& r);

}  // namespace srglab::report
