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

#include "flipiet/serial.hpp"

#include <sstream>

namespace flipiet {

Json field_registry_to_json(const FieldRegistry& reg) {
  Json out = Json::array();
  for (const auto& id : reg.ids()) {
    auto spec = reg.get(id);
    Json coeffs = Json::array();
    for (const auto& c : spec->minimal_polynomial()) coeffs.push_back(c.get_str());
    out.push_back({{"id", id},
                   {"poly_coeffs", coeffs},
                   {"interval",
                    {to_string(spec->isolating_interval().first),
                     to_string(spec->isolating_interval().second)}}});
  }
  return out;
}

FieldRegistry field_registry_from_json(const Json& j) {
  FieldRegistry reg = FieldRegistry::with_builtins();
  for (const auto& entry : j) {
    ZPoly p;
    for (const auto& c : entry.at("poly_coeffs")) p.emplace_back(c.get<std::string>());
    reg.add(FieldSpec::make(p, parse_rational(entry.at("interval")[0].get<std::string>()),
                            parse_rational(entry.at("interval")[1].get<std::string>()),
                            entry.at("id").get<std::string>()));
  }
  return reg;
}

Json to_json(const FlipIet& f) {
  Json alphabet = Json::array(), top = Json::array(), bot = Json::array(),
       flips = Json::array(), lengths = Json::array();
  for (Letter l : f.perm().alphabet()) {
    alphabet.push_back(std::string(1, l));
    flips.push_back(static_cast<int>(f.flip_of(l)));
    lengths.push_back(f.length_of(l).to_string());
  }
  for (Letter l : f.perm().top()) top.push_back(std::string(1, l));
  for (Letter l : f.perm().bot()) bot.push_back(std::string(1, l));
  return {{"alphabet", alphabet}, {"top", top}, {"bot", bot}, {"flips", flips},
          {"lengths", lengths}};
}

Json to_json(const CetMap& f) {
  Json lengths = Json::array();
  Json alphabet = Json::array(), top = Json::array(), bot = Json::array(),
       flips = Json::array();
  for (int i = 0; i < f.n(); ++i) {
    std::string l(1, static_cast<char>('a' + i));
    alphabet.push_back(l);
    top.push_back(l);
    bot.push_back(l);
    flips.push_back(-1);
    lengths.push_back(f.lengths()[static_cast<size_t>(i)].to_string());
  }
  return {{"alphabet", alphabet}, {"top", top}, {"bot", bot}, {"flips", flips},
          {"lengths", lengths}, {"tau", f.tau().to_string()}};
}

namespace {

std::vector<Letter> letters_of(const Json& row) {
  std::vector<Letter> out;
  for (const auto& s : row) {
    std::string v = s.get<std::string>();
    if (v.size() != 1) throw ParseError("letters must be single characters");
    out.push_back(v[0]);
  }
  return out;
}

}  // namespace

FlipIet flip_iet_from_json(const Json& j, const FieldRegistry& reg) {
  std::vector<Letter> alphabet = letters_of(j.at("alphabet"));
  GenPerm perm(letters_of(j.at("top")), letters_of(j.at("bot")));
  FlipVector flips(alphabet.size());
  std::vector<FieldElement> lengths(alphabet.size());
  for (size_t i = 0; i < alphabet.size(); ++i) {
    size_t idx = static_cast<size_t>(perm.alpha_index(alphabet[i]));
    flips[idx] = static_cast<int8_t>(j.at("flips")[i].get<int>());
    lengths[idx] = reg.parse_element(j.at("lengths")[i].get<std::string>());
  }
  return FlipIet(std::move(perm), std::move(flips), std::move(lengths));
}

CetMap cet_from_json(const Json& j, const FieldRegistry& reg) {
  std::vector<FieldElement> lengths;
  for (const auto& s : j.at("lengths")) lengths.push_back(reg.parse_element(s.get<std::string>()));
  return CetMap(std::move(lengths), reg.parse_element(j.at("tau").get<std::string>()));
}

namespace {

Json vertex_json(const RauzyClass& v) {
  std::ostringstream top, bot;
  for (Letter l : v.perm.top()) top << l;
  for (Letter l : v.perm.bot()) bot << l;
  std::string flips;
  for (Letter l : v.perm.alphabet())
    flips.push_back(v.flips[static_cast<size_t>(v.perm.alpha_index(l))] == -1 ? '-' : '+');
  return {{"perm", {{"top", top.str()}, {"bot", bot.str()}}},
          {"flips", flips},
          {"stop", v.is_stop()},
          {"reducible", v.is_reducible()}};
}

}  // namespace

Json to_json(const RauzyGraph& g) {
  Json vertices = Json::array(), edges = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back(vertex_json(v));
  for (const auto& e : g.edges())
    edges.push_back({{"src", e.src},
                     {"dst", e.dst},
                     {"winner", std::string(1, e.winner)},
                     {"loser", std::string(1, e.loser)},
                     {"side", e.side == Side::Top ? "top" : "bottom"}});
  return {{"vertices", vertices}, {"edges", edges}};
}

Json to_json(const QuotientGraph& q) {
  Json classes = Json::array(), edges = Json::array();
  for (const auto& c : q.classes) {
    Json e = vertex_json(c.representative);
    e["members"] = c.members.size();
    classes.push_back(e);
  }
  for (const auto& e : q.edges) {
    std::string h(e.h.begin(), e.h.end());
    edges.push_back({{"src", e.src},
                     {"dst", e.dst},
                     {"winner", std::string(1, e.winner)},
                     {"loser", std::string(1, e.loser)},
                     {"side", e.side == Side::Top ? "top" : "bottom"},
                     {"h", h},
                     {"identity", e.identity_h}});
  }
  return {{"classes", classes}, {"edges", edges}};
}

std::string orbit_csv(const InductionOrbit& orbit) {
  std::ostringstream os;
  os << "step,winner,loser,side,max_len\n";
  for (size_t i = 0; i < orbit.steps.size(); ++i) {
    const auto& e = orbit.steps[i];
    os << i << "," << e.winner << "," << e.loser << ","
       << (e.side == Side::Top ? "top" : "bottom") << ",";
    if (i < orbit.length_history.size()) os << orbit.length_history[i].to_string();
    os << "\n";
  }
  return os.str();
}

Json matrices_json(const InductionOrbit& orbit, const GenPerm& perm) {
  Json out = Json::array();
  const IntMatrix& a = orbit.product;
  Json rows = Json::array();
  for (int r = 0; r < a.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.n(); ++c) row.push_back(a.at(r, c).get_str());
    rows.push_back(row);
  }
  out.push_back({{"product", rows}, {"alphabet", [&] {
                    std::string s;
                    for (Letter l : perm.alphabet()) s.push_back(l);
                    return s;
                  }()}});
  return out;
}

}  // namespace flipiet
