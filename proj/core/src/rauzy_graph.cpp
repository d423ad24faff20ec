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

#include "flipiet/rauzy_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace flipiet {

std::string RauzyClass::key() const {
  std::string k;
  k.reserve(static_cast<size_t>(perm.size()) * 2 + 2);
  for (Letter l : perm.top()) k.push_back(l);
  k.push_back('|');
  for (Letter l : perm.bot()) k.push_back(l);
  k.push_back('|');
  for (Letter l : perm.alphabet())
    k.push_back(flips[static_cast<size_t>(perm.alpha_index(l))] == -1 ? '1' : '0');
  return k;
}

RauzyClass relabel(const RauzyClass& v, const std::vector<Letter>& h) {
  const auto& alpha = v.perm.alphabet();
  auto map_letter = [&](Letter l) { return h[static_cast<size_t>(v.perm.alpha_index(l))]; };
  std::vector<Letter> top, bot;
  top.reserve(v.perm.top().size());
  bot.reserve(v.perm.bot().size());
  for (Letter l : v.perm.top()) top.push_back(map_letter(l));
  for (Letter l : v.perm.bot()) bot.push_back(map_letter(l));
  GenPerm perm(std::move(top), std::move(bot));
  FlipVector flips(static_cast<size_t>(perm.size()));
  for (size_t i = 0; i < alpha.size(); ++i) {
    Letter image = h[i];
    flips[static_cast<size_t>(perm.alpha_index(image))] = v.flips[i];
  }
  return {std::move(perm), std::move(flips)};
}

RauzyClass RauzyClass::canonical(std::vector<Letter>* h_out) const {
  // Relabel onto the standard alphabet A, B, ... so that classes over
  // different letter sets compare as shapes.
  std::vector<Letter> h(static_cast<size_t>(perm.size()));
  for (size_t i = 0; i < h.size(); ++i) h[i] = static_cast<Letter>('A' + i);
  std::vector<Letter> best_h = h;
  RauzyClass best = relabel(*this, h);
  std::string best_key = best.key();
  while (std::next_permutation(h.begin(), h.end())) {
    RauzyClass cand = relabel(*this, h);
    std::string k = cand.key();
    if (k < best_key) {
      best_key = std::move(k);
      best = std::move(cand);
      best_h = h;
    }
  }
  if (h_out) *h_out = best_h;
  return best;
}

RauzyGraph build_component(const RauzyClass& seed, BuildOptions opts) {
  RauzyGraph g;
  std::unordered_map<std::string, int> index;
  std::deque<int> queue;
  g.vertices_.push_back(seed);
  g.out_.emplace_back();
  index[seed.key()] = 0;
  queue.push_back(0);

  while (!queue.empty()) {
    int vi = queue.front();
    queue.pop_front();
    for (Side side : {Side::Top, Side::Bottom}) {
      Letter winner, loser;
      RauzyClass v = g.vertices_[static_cast<size_t>(vi)];
      auto child = comb_step(v.perm, v.flips, side, &winner, &loser);
      if (!child) break;  // stop vertex: neither branch exists
      RauzyClass c{std::move(child->perm), std::move(child->flips)};
      std::string k = c.key();
      auto it = index.find(k);
      int ci;
      if (it == index.end()) {
        ci = static_cast<int>(g.vertices_.size());
        if (g.vertices_.size() >= opts.vertex_budget)
          throw ComponentSizeBudgetExceeded("component exceeds the vertex budget");
        g.vertices_.push_back(std::move(c));
        g.out_.emplace_back();
        index.emplace(std::move(k), ci);
        queue.push_back(ci);
      } else {
        ci = it->second;
      }
      g.out_[static_cast<size_t>(vi)].push_back(static_cast<int>(g.edges_.size()));
      g.edges_.push_back({vi, ci, winner, loser, side});
    }
  }
  return g;
}

size_t RauzyGraph::count(bool exclude_stop, bool irreducible_only) const {
  size_t c = 0;
  for (const auto& v : vertices_) {
    if (exclude_stop && v.is_stop()) continue;
    if (irreducible_only && v.is_reducible()) continue;
    ++c;
  }
  return c;
}

std::vector<int> RauzyGraph::stop_vertices() const {
  std::vector<int> out;
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].is_stop()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<int>> RauzyGraph::sccs() const {
  int n = static_cast<int>(vertices_.size());
  std::vector<int> idx(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int counter = 0;

  struct Frame {
    int v;
    size_t next_edge;
  };
  for (int s = 0; s < n; ++s) {
    if (idx[static_cast<size_t>(s)] != -1) continue;
    std::vector<Frame> frames{{s, 0}};
    idx[static_cast<size_t>(s)] = low[static_cast<size_t>(s)] = counter++;
    stack.push_back(s);
    on_stack[static_cast<size_t>(s)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& edges = out_[static_cast<size_t>(f.v)];
      if (f.next_edge < edges.size()) {
        int w = edges_[static_cast<size_t>(edges[f.next_edge++])].dst;
        if (idx[static_cast<size_t>(w)] == -1) {
          idx[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = true;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], idx[static_cast<size_t>(w)]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[static_cast<size_t>(frames.back().v)] =
              std::min(low[static_cast<size_t>(frames.back().v)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] == idx[static_cast<size_t>(v)]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<size_t>(w)] = false;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          out.push_back(std::move(comp));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> RauzyGraph::on_cycle() const {
  std::vector<std::vector<int>> comps = sccs();
  std::vector<int> comp_of(vertices_.size(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);
  std::vector<bool> internal(comps.size(), false);
  for (const auto& e : edges_)
    if (comp_of[static_cast<size_t>(e.src)] == comp_of[static_cast<size_t>(e.dst)])
      internal[static_cast<size_t>(comp_of[static_cast<size_t>(e.src)])] = true;
  std::vector<bool> out(vertices_.size(), false);
  for (size_t v = 0; v < vertices_.size(); ++v)
    out[v] = internal[static_cast<size_t>(comp_of[v])];
  return out;
}

QuotientGraph quotient(const RauzyGraph& g) {
  QuotientGraph q;
  q.class_of.assign(g.vertices().size(), -1);
  std::map<std::string, int> classes;  // canonical key -> class index (sorted => deterministic)
  std::vector<std::string> canon_keys(g.vertices().size());
  for (size_t v = 0; v < g.vertices().size(); ++v) {
    RauzyClass canon = g.vertices()[v].canonical();
    canon_keys[v] = canon.key();
    auto [it, fresh] = classes.emplace(canon_keys[v], static_cast<int>(q.classes.size()));
    if (fresh) q.classes.push_back({std::move(canon), {}});
    q.class_of[v] = it->second;
  }
  for (size_t v = 0; v < g.vertices().size(); ++v)
    q.classes[static_cast<size_t>(q.class_of[v])].members.push_back(static_cast<int>(v));

  // One pair of branch edges per class, taken on the representative.
  for (size_t c = 0; c < q.classes.size(); ++c) {
    const RauzyClass& rep = q.classes[c].representative;
    for (Side side : {Side::Top, Side::Bottom}) {
      Letter winner, loser;
      auto child = comb_step(rep.perm, rep.flips, side, &winner, &loser);
      if (!child) break;
      RauzyClass raw{std::move(child->perm), std::move(child->flips)};
      std::vector<Letter> h;
      RauzyClass canon = raw.canonical(&h);
      auto it = classes.find(canon.key());
      if (it == classes.end()) continue;  // representative's child outside the built component
      bool ident = true;
      const auto& alpha = raw.perm.alphabet();
      for (size_t i = 0; i < alpha.size(); ++i)
        if (h[i] != alpha[i]) ident = false;
      q.edges.push_back({static_cast<int>(c), it->second, winner, loser, side, h, ident});
    }
  }
  return q;
}

size_t QuotientGraph::count(bool exclude_stop, bool irreducible_only) const {
  size_t c = 0;
  for (const auto& cl : classes) {
    if (exclude_stop && cl.representative.is_stop()) continue;
    if (irreducible_only && cl.representative.is_reducible()) continue;
    ++c;
  }
  return c;
}

PropagationResult propagate_invariant(const RauzyGraph& g, int root, const std::vector<Int>& v) {
  size_t n = g.vertices().size();
  VertexInvariant inv;
  inv.vectors.assign(n, {});
  std::vector<int> parent_edge(n, -1);
  inv.vectors[static_cast<size_t>(root)] = v;
  std::deque<int> queue{root};

  auto path_to = [&](int vertex) {
    std::vector<int> path;
    int cur = vertex;
    while (parent_edge[static_cast<size_t>(cur)] >= 0) {
      int e = parent_edge[static_cast<size_t>(cur)];
      path.push_back(e);
      cur = g.edges()[static_cast<size_t>(e)].src;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    const RauzyClass& vc = g.vertices()[static_cast<size_t>(s)];
    for (int ei : g.out_edges()[static_cast<size_t>(s)]) {
      const GraphEdge& e = g.edges()[static_cast<size_t>(ei)];
      std::vector<Int> w = inv.vectors[static_cast<size_t>(s)];
      IntMatrix::apply_transpose_elementary(w, vc.perm.alpha_index(e.winner),
                                            vc.perm.alpha_index(e.loser));
      auto& slot = inv.vectors[static_cast<size_t>(e.dst)];
      if (slot.empty()) {
        slot = std::move(w);
        parent_edge[static_cast<size_t>(e.dst)] = ei;
        queue.push_back(e.dst);
      } else if (slot != w) {
        std::vector<int> pa = path_to(e.dst);
        std::vector<int> pb = path_to(s);
        pb.push_back(ei);
        return InconsistencyWitness{e.dst, std::move(pa), std::move(pb), slot, std::move(w)};
      }
    }
  }
  return inv;
}

std::vector<NeverWinning> cycles_never_winning_letters(const RauzyGraph& g) {
  auto comps = g.sccs();
  std::vector<int> comp_of(g.vertices().size(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);

  std::vector<NeverWinning> out;
  for (size_t c = 0; c < comps.size(); ++c) {
    std::vector<Letter> winners;
    bool has_internal = false;
    for (const auto& e : g.edges()) {
      if (comp_of[static_cast<size_t>(e.src)] != static_cast<int>(c) ||
          comp_of[static_cast<size_t>(e.dst)] != static_cast<int>(c))
        continue;
      has_internal = true;
      winners.push_back(e.winner);
    }
    if (!has_internal) continue;
    std::sort(winners.begin(), winners.end());
    winners.erase(std::unique(winners.begin(), winners.end()), winners.end());
    const auto& alpha = g.vertices()[static_cast<size_t>(comps[c][0])].perm.alphabet();
    std::vector<Letter> never;
    for (Letter l : alpha)
      if (!std::binary_search(winners.begin(), winners.end(), l)) never.push_back(l);
    out.push_back({comps[c], std::move(never)});
  }
  return out;
}

std::vector<int> find_pattern_vertices(const RauzyGraph& g, const RauzyClass& pattern) {
  std::string target = pattern.canonical().key();
  std::vector<int> out;
  for (size_t v = 0; v < g.vertices().size(); ++v)
    if (g.vertices()[v].canonical().key() == target) out.push_back(static_cast<int>(v));
  return out;
}

namespace {

// Letters with a combining overline for flipped intervals.
std::string dot_label(const RauzyClass& v) {
  std::string s;
  auto row = [&](const std::vector<Letter>& r) {
    for (Letter l : r) {
      s.push_back(l);
      if (v.flips[static_cast<size_t>(v.perm.alpha_index(l))] == -1) s += "\xcc\x85";
    }
  };
  row(v.perm.top());
  s += "\\n";
  row(v.perm.bot());
  return s;
}

}  // namespace

std::string export_dot(const RauzyGraph& g, DotOptions opts) {
  std::ostringstream os;
  os << "digraph rauzy {\n  node [shape=box, fontname=\"monospace\"];\n";
  std::vector<bool> keep(g.vertices().size(), true);
  for (size_t v = 0; v < g.vertices().size(); ++v) {
    if ((opts.suppress_stop_vertices && g.vertices()[v].is_stop()) ||
        (opts.suppress_reducible && g.vertices()[v].is_reducible())) {
      keep[v] = false;
      continue;
    }
    os << "  v" << v << " [label=\"" << dot_label(g.vertices()[v]) << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    if (!keep[static_cast<size_t>(e.src)] || !keep[static_cast<size_t>(e.dst)]) continue;
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.winner << ">" << e.loser
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const QuotientGraph& q, DotOptions opts) {
  std::ostringstream os;
  os << "digraph rauzy_quotient {\n  node [shape=box, fontname=\"monospace\"];\n";
  std::vector<bool> keep(q.classes.size(), true);
  for (size_t c = 0; c < q.classes.size(); ++c) {
    if ((opts.suppress_stop_vertices && q.classes[c].representative.is_stop()) ||
        (opts.suppress_reducible && q.classes[c].representative.is_reducible())) {
      keep[c] = false;
      continue;
    }
    os << "  c" << c << " [label=\"" << dot_label(q.classes[c].representative) << "\"];\n";
  }
  for (const auto& e : q.edges) {
    if (!keep[static_cast<size_t>(e.src)] || !keep[static_cast<size_t>(e.dst)]) continue;
    os << "  c" << e.src << " -> c" << e.dst << " [label=\"" << e.winner << ">" << e.loser
       << "\"" << (e.identity_h ? "" : ", style=dotted") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace flipiet
