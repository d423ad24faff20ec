// Copyright 2026 The flipiet authors
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

#include <json.hpp>

#include "flipiet/cet.hpp"
#include "flipiet/induction.hpp"
#include "flipiet/rauzy_graph.hpp"

namespace flipiet {

using Json = nlohmann::json;

Json field_registry_to_json(const FieldRegistry& reg);
FieldRegistry field_registry_from_json(const Json& j);

// {alphabet, top, bot, flips, lengths (element strings), tau?}
Json to_json(const FlipIet& f);
Json to_json(const CetMap& f);
FlipIet flip_iet_from_json(const Json& j, const FieldRegistry& reg);
CetMap cet_from_json(const Json& j, const FieldRegistry& reg);

// {vertices: [{perm, flips, stop}], edges: [{src, dst, winner, loser, side}]}
Json to_json(const RauzyGraph& g);
Json to_json(const QuotientGraph& q);

// step,winner,loser,side,max_len with exact lengths as strings.
std::string orbit_csv(const InductionOrbit& orbit);
Json matrices_json(const InductionOrbit& orbit, const GenPerm& perm);

}  // namespace flipiet
