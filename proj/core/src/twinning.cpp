#include "mseq/twinning.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "mseq/core.hpp"
#include "mseq/freegroup.hpp"

namespace mseq {

namespace {

constexpr std::uint32_t kNone = 0xffffffff;
constexpr std::size_t kNodeBudget = 2000000;

// ---------------------------------------------------------------------
// Square automaton: pairs of states, edges are pairs of transducer edges
// sharing an input letter.

struct SqEdge {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  std::uint32_t el = 0;  // index into t.edges, left run
  std::uint32_t er = 0;  // index into t.edges, right run
};

struct Square {
  std::uint32_t n = 0;  // states of the underlying transducer
  std::vector<SqEdge> edges;
  std::vector<std::vector<std::uint32_t>> adj;   // node -> outgoing edge ids
  std::vector<std::vector<std::uint32_t>> radj;  // node -> incoming edge ids
};

Square build_square(const Transducer& t) {
  Square g;
  g.n = static_cast<std::uint32_t>(t.num_states());
  std::size_t nodes = static_cast<std::size_t>(g.n) * g.n;
  g.adj.resize(nodes);
  g.radj.resize(nodes);
  for (std::uint32_t i = 0; i < t.edges.size(); ++i) {
    for (std::uint32_t j = 0; j < t.edges.size(); ++j) {
      if (t.edges[i].input != t.edges[j].input) continue;
      SqEdge e;
      e.src = t.edges[i].src * g.n + t.edges[j].src;
      e.dst = t.edges[i].dst * g.n + t.edges[j].dst;
      e.el = i;
      e.er = j;
      std::uint32_t id = static_cast<std::uint32_t>(g.edges.size());
      g.adj[e.src].push_back(id);
      g.radj[e.dst].push_back(id);
      g.edges.push_back(e);
    }
  }
  return g;
}

std::int64_t weight(const Transducer& t, const SqEdge& e) {
  return static_cast<std::int64_t>(t.edges[e.el].output.size()) -
         static_cast<std::int64_t>(t.edges[e.er].output.size());
}

// Tarjan over the square graph.
std::vector<std::uint32_t> square_scc(const Square& g) {
  std::size_t n = g.adj.size();
  std::vector<std::uint32_t> comp(n, kNone), low(n, 0), num(n, kNone);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 0, components = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (num[root] != kNone) continue;
    call.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < g.adj[f.v].size()) {
        std::uint32_t w = g.edges[g.adj[f.v][f.next++]].dst;
        if (num[w] == kNone) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = components;
          } while (w != f.v);
          ++components;
        }
        std::uint32_t done = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[done]);
      }
    }
  }
  return comp;
}

// Per-component cycle structure: whether the component carries a cycle
// at all, an output-length-inconsistent edge (witnessing an unbalanced
// closed walk), and intra edges with non-empty left/right output.
struct CompInfo {
  bool has_intra = false;
  bool inconsistent = false;
  std::uint32_t incons_edge = kNone;
  std::uint32_t left_edge = kNone;   // intra edge with non-empty left output
  std::uint32_t right_edge = kNone;  // intra edge with non-empty right output
};

struct SquareAnalysis {
  std::vector<std::uint32_t> comp;
  std::vector<CompInfo> info;
  std::vector<std::vector<std::uint32_t>> intra;  // component -> intra edge ids
};

SquareAnalysis analyse(const Transducer& t, const Square& g) {
  SquareAnalysis a;
  a.comp = square_scc(g);
  std::uint32_t components = 0;
  for (std::uint32_t c : a.comp) components = std::max(components, c + 1);
  a.info.resize(components);
  a.intra.resize(components);
  for (std::uint32_t ei = 0; ei < g.edges.size(); ++ei) {
    const SqEdge& e = g.edges[ei];
    if (a.comp[e.src] != a.comp[e.dst]) continue;
    std::uint32_t c = a.comp[e.src];
    a.intra[c].push_back(ei);
    a.info[c].has_intra = true;
    if (a.info[c].left_edge == kNone && !t.edges[e.el].output.empty()) {
      a.info[c].left_edge = ei;
    }
    if (a.info[c].right_edge == kNone && !t.edges[e.er].output.empty()) {
      a.info[c].right_edge = ei;
    }
  }

  // Potential consistency per component: assign potentials along a BFS
  // tree of intra edges; any intra edge violating them closes an
  // unbalanced walk.
  std::vector<std::int64_t> pot(g.adj.size(), 0);
  std::vector<bool> seen(g.adj.size(), false);
  for (std::uint32_t c = 0; c < components; ++c) {
    if (!a.info[c].has_intra) continue;
    std::uint32_t root = g.edges[a.intra[c].front()].src;
    std::deque<std::uint32_t> queue{root};
    pot[root] = 0;
    seen[root] = true;
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t ei : g.adj[v]) {
        const SqEdge& e = g.edges[ei];
        if (a.comp[e.dst] != c) continue;
        if (!seen[e.dst]) {
          seen[e.dst] = true;
          pot[e.dst] = pot[v] + weight(t, e);
          queue.push_back(e.dst);
        }
      }
    }
    for (std::uint32_t ei : a.intra[c]) {
      const SqEdge& e = g.edges[ei];
      if (pot[e.src] + weight(t, e) != pot[e.dst]) {
        a.info[c].inconsistent = true;
        a.info[c].incons_edge = ei;
        break;
      }
    }
  }
  return a;
}

// Paths inside one component, used to assemble closed walks through
// chosen intra edges.
struct CompPaths {
  std::vector<std::uint32_t> fpar;  // node -> intra edge reaching it from s
  std::vector<std::uint32_t> rpar;  // node -> intra edge leaving it towards s
  std::uint32_t s = 0;
};

CompPaths comp_paths(const Square& g, const SquareAnalysis& a, std::uint32_t s) {
  CompPaths p;
  p.s = s;
  p.fpar.assign(g.adj.size(), kNone);
  p.rpar.assign(g.adj.size(), kNone);
  std::uint32_t c = a.comp[s];

  std::deque<std::uint32_t> queue{s};
  std::vector<bool> seen(g.adj.size(), false);
  seen[s] = true;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t ei : g.adj[v]) {
      const SqEdge& e = g.edges[ei];
      if (a.comp[e.dst] != c || seen[e.dst]) continue;
      seen[e.dst] = true;
      p.fpar[e.dst] = ei;
      queue.push_back(e.dst);
    }
  }
  std::fill(seen.begin(), seen.end(), false);
  seen[s] = true;
  queue.push_back(s);
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t ei : g.radj[v]) {
      const SqEdge& e = g.edges[ei];
      if (a.comp[e.src] != c || seen[e.src]) continue;
      seen[e.src] = true;
      p.rpar[e.src] = ei;
      queue.push_back(e.src);
    }
  }
  return p;
}

std::vector<std::uint32_t> path_from_s(const Square& g, const CompPaths& p,
                                       std::uint32_t x) {
  std::vector<std::uint32_t> path;
  while (x != p.s) {
    std::uint32_t ei = p.fpar[x];
    path.push_back(ei);
    x = g.edges[ei].src;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::uint32_t> path_to_s(const Square& g, const CompPaths& p,
                                     std::uint32_t x) {
  std::vector<std::uint32_t> path;
  while (x != p.s) {
    std::uint32_t ei = p.rpar[x];
    path.push_back(ei);
    x = g.edges[ei].dst;
  }
  return path;
}

std::int64_t walk_weight(const Transducer& t, const Square& g,
                         const std::vector<std::uint32_t>& walk) {
  std::int64_t w = 0;
  for (std::uint32_t ei : walk) w += weight(t, g.edges[ei]);
  return w;
}

std::vector<std::uint32_t> unbalanced_cycle(const Transducer& t, const Square& g,
                                            const SquareAnalysis& a,
                                            std::uint32_t s) {
  CompPaths p = comp_paths(g, a, s);
  const SqEdge& e = g.edges[a.info[a.comp[s]].incons_edge];
  std::vector<std::uint32_t> c1 = path_from_s(g, p, e.src);
  c1.push_back(a.info[a.comp[s]].incons_edge);
  auto tail = path_to_s(g, p, e.dst);
  c1.insert(c1.end(), tail.begin(), tail.end());
  if (walk_weight(t, g, c1) != 0) return c1;
  // The potentials certify that one of the two walks through e.dst is
  // unbalanced; the first was not, so the tree walk is.
  std::vector<std::uint32_t> c2 = path_from_s(g, p, e.dst);
  c2.insert(c2.end(), tail.begin(), tail.end());
  assert(walk_weight(t, g, c2) != 0);
  return c2;
}

std::vector<std::uint32_t> both_nonempty_cycle(const Square& g,
                                               const SquareAnalysis& a,
                                               std::uint32_t s) {
  CompPaths p = comp_paths(g, a, s);
  const CompInfo& info = a.info[a.comp[s]];
  auto loop_through = [&](std::uint32_t ei) {
    std::vector<std::uint32_t> walk = path_from_s(g, p, g.edges[ei].src);
    walk.push_back(ei);
    auto tail = path_to_s(g, p, g.edges[ei].dst);
    walk.insert(walk.end(), tail.begin(), tail.end());
    return walk;
  };
  std::vector<std::uint32_t> cycle = loop_through(info.left_edge);
  if (info.right_edge != info.left_edge) {
    auto second = loop_through(info.right_edge);
    cycle.insert(cycle.end(), second.begin(), second.end());
  }
  return cycle;
}

// ---------------------------------------------------------------------
// Delay propagation. A one-sided delay is delta(out_l, out_r) when the
// outputs are prefix-comparable: side 0 stores w with out_r = out_l w,
// side 1 stores w with out_l = out_r w. Anything else is a mismatch,
// which is absorbing.

struct DelayKey {
  std::uint32_t sq;
  std::uint8_t side;
  Word w;

  auto operator<=>(const DelayKey&) const = default;
};

struct StepResult {
  bool mismatch = false;
  std::uint8_t side = 0;
  Word w;
};

StepResult delay_step(std::uint8_t side, const Word& w, const Word& x,
                      const Word& y) {
  StepResult r;
  Word lhs, rhs;  // compare lhs (left side) against rhs (right side)
  if (side == 0) {
    lhs = x;
    rhs = w + y;
  } else {
    lhs = w + x;
    rhs = y;
  }
  std::size_t k = 0;
  while (k < lhs.size() && k < rhs.size() && lhs[k] == rhs[k]) ++k;
  if (k == lhs.size()) {
    r.side = 0;
    r.w = rhs.substr(k);
  } else if (k == rhs.size()) {
    r.side = 1;
    r.w = lhs.substr(k);
  } else {
    r.mismatch = true;
  }
  if (r.w.empty()) r.side = 0;
  return r;
}

// ---------------------------------------------------------------------
// Pattern search shared by check_tp and check_wtp. A violation is an
// access walk from a source square state to an anchor carrying a cycle
// that breaks the delay, per the two cases: an unbalanced cycle, or a
// cycle with both outputs non-empty reached with mismatched access
// outputs.

struct RawPattern {
  std::uint32_t source = 0;
  std::uint32_t anchor = 0;
  std::vector<std::uint32_t> access;  // square edge ids
  std::vector<std::uint32_t> cycle;   // square edge ids
};

std::optional<RawPattern> find_pattern(
    const Transducer& t, const Square& g, const SquareAnalysis& a,
    const std::vector<std::uint32_t>& sources,
    const std::function<bool(std::uint32_t)>& anchor_ok,
    std::size_t delay_cutoff) {
  const std::size_t nodes = g.adj.size();

  // Plain reachability with parents.
  std::vector<bool> reach(nodes, false);
  std::vector<std::uint32_t> par(nodes, kNone), origin(nodes, kNone);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s : sources) {
    if (!reach[s]) {
      reach[s] = true;
      origin[s] = s;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t ei : g.adj[v]) {
      std::uint32_t d = g.edges[ei].dst;
      if (!reach[d]) {
        reach[d] = true;
        par[d] = ei;
        origin[d] = origin[v];
        queue.push_back(d);
      }
    }
  }
  auto plain_access = [&](std::uint32_t x) {
    std::vector<std::uint32_t> path;
    while (par[x] != kNone) {
      path.push_back(par[x]);
      x = g.edges[par[x]].src;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  // Case one: anchor inside a component with an unbalanced cycle.
  for (std::uint32_t v = 0; v < nodes; ++v) {
    if (!reach[v] || !anchor_ok(v)) continue;
    if (!a.info[a.comp[v]].inconsistent) continue;
    RawPattern p;
    p.anchor = v;
    p.access = plain_access(v);
    p.source = origin[v];
    p.cycle = unbalanced_cycle(t, g, a, v);
    return p;
  }

  // Case two: mismatched access into an anchor whose component carries a
  // cycle with both outputs non-empty. Delay nodes above the cutoff are
  // dropped.
  std::map<DelayKey, std::uint32_t> ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> dpar;  // (node, edge)
  std::vector<DelayKey> keys;
  std::deque<std::uint32_t> dqueue;
  auto dintern = [&](DelayKey key, std::uint32_t from, std::uint32_t via) {
    auto [it, inserted] = ids.try_emplace(std::move(key), 0);
    if (!inserted) return;
    if (ids.size() > kNodeBudget) {
      throw BoundExceededError("twinning: delay exploration budget exceeded");
    }
    it->second = static_cast<std::uint32_t>(keys.size());
    keys.push_back(it->first);
    dpar.push_back({from, via});
    dqueue.push_back(it->second);
  };
  for (std::uint32_t s : sources) dintern({s, 0, Word{}}, kNone, kNone);

  std::vector<bool> mreach(nodes, false);
  std::vector<std::uint32_t> mpar(nodes, kNone);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> mseed(
      nodes, {kNone, kNone});  // (delay node, edge) producing the mismatch
  std::deque<std::uint32_t> mqueue;

  while (!dqueue.empty()) {
    std::uint32_t id = dqueue.front();
    dqueue.pop_front();
    DelayKey key = keys[id];
    for (std::uint32_t ei : g.adj[key.sq]) {
      const SqEdge& e = g.edges[ei];
      StepResult r =
          delay_step(key.side, key.w, t.edges[e.el].output, t.edges[e.er].output);
      if (r.mismatch) {
        if (!mreach[e.dst]) {
          mreach[e.dst] = true;
          mseed[e.dst] = {id, ei};
          mqueue.push_back(e.dst);
        }
        continue;
      }
      if (r.w.size() > delay_cutoff) continue;
      dintern({e.dst, r.side, std::move(r.w)}, id, ei);
    }
  }
  while (!mqueue.empty()) {
    std::uint32_t v = mqueue.front();
    mqueue.pop_front();
    for (std::uint32_t ei : g.adj[v]) {
      std::uint32_t d = g.edges[ei].dst;
      if (!mreach[d]) {
        mreach[d] = true;
        mpar[d] = ei;
        mqueue.push_back(d);
      }
    }
  }

  for (std::uint32_t v = 0; v < nodes; ++v) {
    if (!mreach[v] || !anchor_ok(v)) continue;
    const CompInfo& info = a.info[a.comp[v]];
    if (!info.has_intra || info.left_edge == kNone || info.right_edge == kNone) {
      continue;
    }
    RawPattern p;
    p.anchor = v;
    p.cycle = both_nonempty_cycle(g, a, v);
    // Rebuild the access: propagation parents back to the mismatch
    // point, then delay parents back to a source.
    std::vector<std::uint32_t> tail;
    std::uint32_t x = v;
    while (mpar[x] != kNone && mseed[x].first == kNone) {
      tail.push_back(mpar[x]);
      x = g.edges[mpar[x]].src;
    }
    auto [dnode, dedge] = mseed[x];
    std::vector<std::uint32_t> head{dedge};
    std::uint32_t id = dnode;
    while (dpar[id].first != kNone) {
      head.push_back(dpar[id].second);
      id = dpar[id].first;
    }
    p.source = keys[id].sq;
    std::reverse(head.begin(), head.end());
    std::reverse(tail.begin(), tail.end());
    p.access = std::move(head);
    p.access.insert(p.access.end(), tail.begin(), tail.end());
    return p;
  }
  return std::nullopt;
}

struct PatternWords {
  Word u, v, u1, u2, v1, v2;
};

PatternWords pattern_words(const Transducer& t, const Square& g,
                           const RawPattern& p) {
  PatternWords w;
  for (std::uint32_t ei : p.access) {
    const SqEdge& e = g.edges[ei];
    w.u.push_back(t.edges[e.el].input);
    w.u1 += t.edges[e.el].output;
    w.u2 += t.edges[e.er].output;
  }
  for (std::uint32_t ei : p.cycle) {
    const SqEdge& e = g.edges[ei];
    w.v.push_back(t.edges[e.el].input);
    w.v1 += t.edges[e.el].output;
    w.v2 += t.edges[e.er].output;
  }
  return w;
}

std::size_t delay_cutoff_of(const Transducer& t) {
  std::size_t n = t.num_states();
  return std::max<std::size_t>(1, 2 * max_output_len(t) * n * n * n);
}

bool run_exists(const Transducer& t, State from, State to, const Word& input,
                const Word& output) {
  auto adj = adjacency(t);
  std::set<std::tuple<State, std::size_t, std::size_t>> visited;
  std::vector<std::tuple<State, std::size_t, std::size_t>> stack{{from, 0, 0}};
  while (!stack.empty()) {
    auto [q, i, pos] = stack.back();
    stack.pop_back();
    if (!visited.insert({q, i, pos}).second) continue;
    if (i == input.size()) {
      if (q == to && pos == output.size()) return true;
      continue;
    }
    for (std::size_t ei : adj[q]) {
      const Edge& e = t.edges[ei];
      if (e.input != input[i]) continue;
      if (output.compare(pos, e.output.size(), e.output) != 0) continue;
      stack.push_back({e.dst, i + 1, pos + e.output.size()});
    }
  }
  return false;
}

Word repeat(const Word& w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out += w;
  return out;
}

std::string show(const Word& w) { return w.empty() ? "-" : w; }

}  // namespace

TpResult check_tp(const Transducer& t) {
  TpResult result;
  if (t.num_states() == 0) return result;
  Square g = build_square(t);
  SquareAnalysis a = analyse(t, g);
  std::vector<std::uint32_t> sources;
  for (State i : t.initials) {
    for (State j : t.initials) sources.push_back(i * g.n + j);
  }
  auto pattern = find_pattern(t, g, a, sources, [](std::uint32_t) { return true; },
                              delay_cutoff_of(t));
  if (!pattern) return result;

  PatternWords w = pattern_words(t, g, *pattern);
  TpWitness witness;
  witness.i1 = pattern->source / g.n;
  witness.i2 = pattern->source % g.n;
  witness.q1 = pattern->anchor / g.n;
  witness.q2 = pattern->anchor % g.n;
  witness.u = w.u;
  witness.v = w.v;
  witness.u1 = w.u1;
  witness.u2 = w.u2;
  witness.v1 = w.v1;
  witness.v2 = w.v2;
  result.holds = false;
  result.witness = witness;
  return result;
}

WtpResult check_wtp(const Transducer& t) {
  WtpResult result;
  const std::uint32_t n = static_cast<std::uint32_t>(t.num_states());
  if (n == 0) return result;
  Square g = build_square(t);
  SquareAnalysis a = analyse(t, g);
  std::size_t cutoff = delay_cutoff_of(t);
  for (std::uint32_t l = 0; l < n; ++l) {
    std::vector<std::uint32_t> sources{l * n + l};
    auto pattern = find_pattern(
        t, g, a, sources, [&](std::uint32_t v) { return v / n == l; }, cutoff);
    if (!pattern) continue;
    PatternWords w = pattern_words(t, g, *pattern);
    WtpWitness witness;
    witness.q1 = l;
    witness.q2 = pattern->anchor % n;
    witness.u = w.u;
    witness.v = w.v;
    witness.u1 = w.u1;
    witness.u2 = w.u2;
    witness.v1 = w.v1;
    witness.v2 = w.v2;
    result.holds = false;
    result.witness = normalize_witness(witness);
    return result;
  }
  return result;
}

bool replay_wtp(const Transducer& t, const WtpWitness& w) {
  return run_exists(t, w.q1, w.q1, w.u, w.u1) &&
         run_exists(t, w.q1, w.q1, w.v, w.v1) &&
         run_exists(t, w.q1, w.q2, w.u, w.u2) &&
         run_exists(t, w.q2, w.q2, w.v, w.v2) &&
         delay(w.u1, w.u2) != delay(w.u1 + w.v1, w.u2 + w.v2);
}

bool replay_tp(const Transducer& t, const TpWitness& w) {
  return t.is_initial(w.i1) && t.is_initial(w.i2) &&
         run_exists(t, w.i1, w.q1, w.u, w.u1) &&
         run_exists(t, w.q1, w.q1, w.v, w.v1) &&
         run_exists(t, w.i2, w.q2, w.u, w.u2) &&
         run_exists(t, w.q2, w.q2, w.v, w.v2) &&
         delay(w.u1, w.u2) != delay(w.u1 + w.v1, w.u2 + w.v2);
}

WtpWitness normalize_witness(const WtpWitness& input) {
  WtpWitness w = input;
  auto pump_access = [&](std::size_t d) {
    w.u += repeat(w.v, d);
    w.u1 += repeat(w.v1, d);
    w.u2 += repeat(w.v2, d);
  };
  if (w.v1.size() != w.v2.size()) {
    // Align the length orders of the access outputs and the cycle
    // outputs so each pump strictly grows the delay.
    if (w.v1.size() < w.v2.size() && w.u1.size() > w.u2.size()) {
      pump_access(w.u1.size() - w.u2.size());
    } else if (w.v1.size() > w.v2.size() && w.u2.size() > w.u1.size()) {
      pump_access(w.u2.size() - w.u1.size());
    }
    return w;
  }
  // Balanced cycle: pump until the access outputs mismatch, which is
  // then preserved forever.
  auto mismatched = [](const Word& a, const Word& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k < a.size() && k < b.size();
  };
  if (mismatched(w.u1, w.u2)) return w;
  std::size_t limit = w.u1.size() + w.u2.size() + w.v1.size() + w.v2.size() + 64;
  for (std::size_t d = 1; d <= limit; ++d) {
    pump_access(1);
    if (mismatched(w.u1, w.u2)) return w;
  }
  return w;  // not reachable for witnesses of a genuine violation
}

std::size_t pump_witness(const WtpWitness& w, std::size_t n) {
  return glen(delay(w.u1 + repeat(w.v1, n), w.u2 + repeat(w.v2, n)));
}

// ---------------------------------------------------------------------
// Direct enumeration oracle over the definition, restricted to
// 1 <= |u|, |v| <= max_pattern_len. Anchor delays fall into three cases
// that justify the shortcuts below:
//   - an unbalanced cycle (|v1| != |v2|) moves every delay: comparable
//     ones by the length of their representative word, mismatched ones
//     because glen grows by |v1| + |v2| > 0;
//   - a mismatched anchor delay moves exactly under cycles with
//     v1 v2 != eps (the mismatch position is preserved, the glen grows);
//   - a comparable anchor delay under balanced cycles needs the seeded
//     delay search.

namespace {

// Shortest closed walk at s of length 1..max_len with total output
// length difference != 0 (layered BFS over (node, weight)). Empty when
// there is none.
std::vector<std::uint32_t> bounded_unbalanced_cycle(const Transducer& t,
                                                    const Square& g,
                                                    std::uint32_t s,
                                                    std::size_t max_len) {
  std::size_t m = std::max<std::size_t>(1, max_output_len(t));
  std::int64_t span = static_cast<std::int64_t>(m * max_len);
  std::size_t width = static_cast<std::size_t>(2 * span + 1);
  auto slot = [&](std::uint32_t node, std::int64_t wgt) {
    return node * width + static_cast<std::size_t>(wgt + span);
  };
  std::vector<std::uint32_t> par(g.adj.size() * width, kNone);
  std::vector<std::uint32_t> dist(g.adj.size() * width, kNone);
  std::deque<std::size_t> queue{slot(s, 0)};
  dist[slot(s, 0)] = 0;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    std::uint32_t node = static_cast<std::uint32_t>(cur / width);
    std::int64_t wgt = static_cast<std::int64_t>(cur % width) - span;
    if (dist[cur] >= max_len) continue;
    for (std::uint32_t ei : g.adj[node]) {
      const SqEdge& e = g.edges[ei];
      std::int64_t next_w = wgt + weight(t, e);
      if (next_w < -span || next_w > span) continue;
      std::size_t nxt = slot(e.dst, next_w);
      if (dist[nxt] != kNone) continue;
      dist[nxt] = dist[cur] + 1;
      par[nxt] = ei;
      if (e.dst == s && next_w != 0) {
        std::vector<std::uint32_t> walk;
        std::size_t x = nxt;
        while (x != slot(s, 0)) {
          std::uint32_t pe = par[x];
          walk.push_back(pe);
          x = slot(g.edges[pe].src,
                   static_cast<std::int64_t>(x % width) - span - weight(t, g.edges[pe]));
        }
        std::reverse(walk.begin(), walk.end());
        return walk;
      }
      queue.push_back(nxt);
    }
  }
  return {};
}

// Shortest closed walk at s of length 1..max_len with at least one
// non-empty output on either side. Empty when there is none.
std::vector<std::uint32_t> bounded_nonempty_cycle(const Transducer& t,
                                                  const Square& g, std::uint32_t s,
                                                  std::size_t max_len) {
  auto slot = [&](std::uint32_t node, bool bit) { return node * 2 + (bit ? 1 : 0); };
  std::vector<std::uint32_t> par_edge(g.adj.size() * 2, kNone);
  std::vector<std::size_t> par_slot(g.adj.size() * 2, 0);
  std::vector<std::uint32_t> dist(g.adj.size() * 2, kNone);
  std::deque<std::size_t> queue{slot(s, false)};
  dist[slot(s, false)] = 0;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    std::uint32_t node = static_cast<std::uint32_t>(cur / 2);
    bool bit = cur % 2 != 0;
    if (dist[cur] >= max_len) continue;
    for (std::uint32_t ei : g.adj[node]) {
      const SqEdge& e = g.edges[ei];
      bool next_bit = bit || !t.edges[e.el].output.empty() ||
                      !t.edges[e.er].output.empty();
      std::size_t nxt = slot(e.dst, next_bit);
      if (dist[nxt] != kNone) continue;
      dist[nxt] = dist[cur] + 1;
      par_edge[nxt] = ei;
      par_slot[nxt] = cur;
      if (e.dst == s && next_bit) {
        std::vector<std::uint32_t> walk;
        std::size_t x = nxt;
        while (x != slot(s, false)) {
          walk.push_back(par_edge[x]);
          x = par_slot[x];
        }
        std::reverse(walk.begin(), walk.end());
        return walk;
      }
      queue.push_back(nxt);
    }
  }
  return {};
}

// Reverse multi-source BFS: plain distance from each node to the nearest
// target, kNone when unreachable.
std::vector<std::uint32_t> dist_to_targets(const Square& g,
                                           const std::vector<std::uint32_t>& targets) {
  std::vector<std::uint32_t> dist(g.adj.size(), kNone);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v : targets) {
    if (dist[v] == kNone) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t ei : g.radj[v]) {
      std::uint32_t p = g.edges[ei].src;
      if (dist[p] == kNone) {
        dist[p] = dist[v] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

struct OracleSearch {
  std::map<DelayKey, std::uint32_t> ids;
  std::vector<DelayKey> keys;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent;  // (node, edge)
  std::vector<std::uint32_t> depth;
  std::deque<std::uint32_t> queue;

  std::uint32_t intern(DelayKey key, std::uint32_t from, std::uint32_t via,
                       std::uint32_t d) {
    auto [it, inserted] = ids.try_emplace(std::move(key), 0);
    if (!inserted) return kNone;
    if (ids.size() > kNodeBudget) {
      throw BoundExceededError("twinning oracle: node budget exceeded");
    }
    it->second = static_cast<std::uint32_t>(keys.size());
    keys.push_back(it->first);
    parent.push_back({from, via});
    depth.push_back(d);
    queue.push_back(it->second);
    return it->second;
  }

  std::vector<std::uint32_t> path(std::uint32_t id) const {
    std::vector<std::uint32_t> edges;
    while (parent[id].first != kNone) {
      edges.push_back(parent[id].second);
      id = parent[id].first;
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
  }
};

// Closed delay-carrying walk at `anchor`, length 1..max_len, that ends
// with a delay different from the seed. `back_dist` prunes nodes that
// cannot return in the remaining depth.
std::optional<std::vector<std::uint32_t>> changing_cycle(
    const Transducer& t, const Square& g, std::uint32_t anchor,
    const DelayKey& seed, std::size_t max_len,
    const std::vector<std::uint32_t>& back_dist) {
  OracleSearch s;
  s.intern(seed, kNone, kNone, 0);
  // Mismatch is absorbing, so walks past a mismatch only need plain
  // reachability back to the anchor; any such return is a change since
  // the seed is comparable.
  std::vector<std::uint32_t> mpar(g.adj.size(), kNone), mdepth(g.adj.size(), kNone);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> mseed(g.adj.size(),
                                                             {kNone, kNone});
  std::deque<std::uint32_t> mqueue;
  auto enter_mismatch = [&](std::uint32_t dst, std::uint32_t from, std::uint32_t via,
                            std::uint32_t d) {
    if (mdepth[dst] != kNone) return;
    mdepth[dst] = d;
    mseed[dst] = {from, via};
    mqueue.push_back(dst);
  };
  std::size_t head = 0;
  while (head < s.keys.size()) {
    std::uint32_t id = static_cast<std::uint32_t>(head++);
    if (s.depth[id] >= max_len) continue;
    DelayKey key = s.keys[id];
    for (std::uint32_t ei : g.adj[key.sq]) {
      const SqEdge& e = g.edges[ei];
      StepResult r =
          delay_step(key.side, key.w, t.edges[e.el].output, t.edges[e.er].output);
      std::uint32_t d = s.depth[id] + 1;
      if (back_dist[e.dst] == kNone || d + back_dist[e.dst] > max_len) continue;
      if (r.mismatch) {
        enter_mismatch(e.dst, id, ei, d);
        continue;
      }
      std::uint32_t nid = s.intern({e.dst, r.side, std::move(r.w)}, id, ei, d);
      if (nid == kNone) continue;
      const DelayKey& nk = s.keys[nid];
      if (e.dst == anchor && (nk.side != seed.side || nk.w != seed.w)) {
        return s.path(nid);
      }
    }
  }
  while (!mqueue.empty()) {
    std::uint32_t v = mqueue.front();
    mqueue.pop_front();
    if (v == anchor) {
      std::vector<std::uint32_t> tail;
      std::uint32_t x = v;
      while (mseed[x].first == kNone) {
        tail.push_back(mpar[x]);
        x = g.edges[mpar[x]].src;
      }
      auto [dnode, dedge] = mseed[x];
      std::vector<std::uint32_t> walk = s.path(dnode);
      walk.push_back(dedge);
      std::reverse(tail.begin(), tail.end());
      walk.insert(walk.end(), tail.begin(), tail.end());
      return walk;
    }
    if (mdepth[v] >= max_len) continue;
    for (std::uint32_t ei : g.adj[v]) {
      std::uint32_t dst = g.edges[ei].dst;
      std::uint32_t nd = mdepth[v] + 1;
      if (back_dist[dst] == kNone || nd + back_dist[dst] > max_len) continue;
      if (mdepth[dst] != kNone) continue;
      mdepth[dst] = nd;
      mpar[dst] = ei;
      mqueue.push_back(dst);
    }
  }
  return std::nullopt;
}

WtpWitness oracle_witness(const Transducer& t, const Square& g, std::uint32_t q1,
                          std::uint32_t anchor,
                          const std::vector<std::uint32_t>& access,
                          const std::vector<std::uint32_t>& cycle) {
  WtpWitness w;
  w.q1 = q1;
  w.q2 = anchor % g.n;
  for (std::uint32_t ei : access) {
    const SqEdge& e = g.edges[ei];
    w.u.push_back(t.edges[e.el].input);
    w.u1 += t.edges[e.el].output;
    w.u2 += t.edges[e.er].output;
  }
  for (std::uint32_t ei : cycle) {
    const SqEdge& e = g.edges[ei];
    w.v.push_back(t.edges[e.el].input);
    w.v1 += t.edges[e.el].output;
    w.v2 += t.edges[e.er].output;
  }
  return w;
}

}  // namespace

WtpResult check_wtp_bruteforce(const Transducer& t, std::size_t max_pattern_len) {
  WtpResult result;
  const std::uint32_t n = static_cast<std::uint32_t>(t.num_states());
  if (n == 0) return result;
  Square g = build_square(t);
  SquareAnalysis a = analyse(t, g);
  const std::size_t L = max_pattern_len;

  std::map<std::uint32_t, std::vector<std::uint32_t>> nonempty_cache;
  auto nonempty_at = [&](std::uint32_t sq) -> const std::vector<std::uint32_t>& {
    auto it = nonempty_cache.find(sq);
    if (it == nonempty_cache.end()) {
      it = nonempty_cache.emplace(sq, bounded_nonempty_cycle(t, g, sq, L)).first;
    }
    return it->second;
  };

  auto found = [&](WtpWitness w) {
    result.holds = false;
    result.witness = std::move(w);
    return result;
  };

  for (std::uint32_t q1 = 0; q1 < n; ++q1) {
    std::uint32_t root = q1 * n + q1;
    std::vector<std::uint32_t> anchors;
    for (std::uint32_t r = 0; r < n; ++r) {
      std::uint32_t sq = q1 * n + r;
      if (a.info[a.comp[sq]].has_intra) anchors.push_back(sq);
    }
    if (anchors.empty()) continue;

    // Plain forward reachability with parents, for the shortcut cases.
    std::vector<std::uint32_t> pdist(g.adj.size(), kNone), ppar(g.adj.size(), kNone);
    std::deque<std::uint32_t> pqueue{root};
    pdist[root] = 0;
    while (!pqueue.empty()) {
      std::uint32_t v = pqueue.front();
      pqueue.pop_front();
      for (std::uint32_t ei : g.adj[v]) {
        std::uint32_t d = g.edges[ei].dst;
        if (pdist[d] == kNone) {
          pdist[d] = pdist[v] + 1;
          ppar[d] = ei;
          pqueue.push_back(d);
        }
      }
    }
    auto plain_path = [&](std::uint32_t x) {
      std::vector<std::uint32_t> path;
      while (ppar[x] != kNone) {
        path.push_back(ppar[x]);
        x = g.edges[ppar[x]].src;
      }
      std::reverse(path.begin(), path.end());
      return path;
    };

    // Case one: an unbalanced cycle at a reachable anchor violates the
    // definition for every access, including the empty one (then the
    // cycle itself doubles as the access: u = v).
    for (std::uint32_t sq : anchors) {
      if (pdist[sq] == kNone || pdist[sq] > L) continue;
      std::vector<std::uint32_t> cyc = bounded_unbalanced_cycle(t, g, sq, L);
      if (cyc.empty()) continue;
      std::vector<std::uint32_t> access = pdist[sq] == 0 ? cyc : plain_path(sq);
      return found(oracle_witness(t, g, q1, sq, access, cyc));
    }

    // Delay-carrying access search with mismatch collapsed into plain
    // reachability (it is absorbing) and anchors handled inline.
    std::vector<std::uint32_t> adist = dist_to_targets(g, anchors);
    if (adist[root] == kNone) continue;

    std::map<std::uint32_t, std::vector<std::uint32_t>> back_cache;
    auto back_dist_of = [&](std::uint32_t sq) -> const std::vector<std::uint32_t>& {
      auto it = back_cache.find(sq);
      if (it == back_cache.end()) {
        it = back_cache.emplace(sq, dist_to_targets(g, {sq})).first;
      }
      return it->second;
    };

    // The root itself is an anchor candidate: a cycle that changes the
    // empty delay yields a violation with u = v.
    if (a.info[a.comp[root]].has_intra) {
      DelayKey seed{root, 0, Word{}};
      if (auto cyc = changing_cycle(t, g, root, seed, L, back_dist_of(root))) {
        return found(oracle_witness(t, g, q1, root, *cyc, *cyc));
      }
    }

    OracleSearch acc;
    acc.intern({root, 0, Word{}}, kNone, kNone, 0);
    std::vector<std::uint32_t> mpar(g.adj.size(), kNone), mdepth(g.adj.size(), kNone);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> mseed(g.adj.size(),
                                                               {kNone, kNone});
    std::deque<std::uint32_t> mqueue;
    std::size_t head = 0;
    while (head < acc.keys.size()) {
      std::uint32_t id = static_cast<std::uint32_t>(head++);
      if (acc.depth[id] >= L) continue;
      DelayKey key = acc.keys[id];
      for (std::uint32_t ei : g.adj[key.sq]) {
        const SqEdge& e = g.edges[ei];
        StepResult r =
            delay_step(key.side, key.w, t.edges[e.el].output, t.edges[e.er].output);
        std::uint32_t d = acc.depth[id] + 1;
        if (adist[e.dst] == kNone || d + adist[e.dst] > L) continue;
        if (r.mismatch) {
          if (mdepth[e.dst] == kNone) {
            mdepth[e.dst] = d;
            mseed[e.dst] = {id, ei};
            mqueue.push_back(e.dst);
          }
          continue;
        }
        std::uint32_t nid = acc.intern({e.dst, r.side, std::move(r.w)}, id, ei, d);
        if (nid == kNone) continue;
        if (e.dst / n == q1 && a.info[a.comp[e.dst]].has_intra) {
          if (auto cyc =
                  changing_cycle(t, g, e.dst, acc.keys[nid], L, back_dist_of(e.dst))) {
            return found(oracle_witness(t, g, q1, e.dst, acc.path(nid), *cyc));
          }
        }
      }
    }

    // Mismatch propagation: absorbing, so plain reachability suffices.
    while (!mqueue.empty()) {
      std::uint32_t v = mqueue.front();
      mqueue.pop_front();
      if (mdepth[v] >= L) continue;
      for (std::uint32_t ei : g.adj[v]) {
        std::uint32_t d = g.edges[ei].dst;
        std::uint32_t nd = mdepth[v] + 1;
        if (adist[d] == kNone || nd + adist[d] > L) continue;
        if (mdepth[d] != kNone) continue;
        mdepth[d] = nd;
        mpar[d] = ei;
        mqueue.push_back(d);
      }
    }
    for (std::uint32_t sq : anchors) {
      if (mdepth[sq] == kNone) continue;
      const std::vector<std::uint32_t>& cyc = nonempty_at(sq);
      if (cyc.empty()) continue;
      // Access: propagation parents back to the mismatch point, then
      // delay parents back to the root.
      std::vector<std::uint32_t> tail;
      std::uint32_t x = sq;
      while (mseed[x].first == kNone) {
        tail.push_back(mpar[x]);
        x = g.edges[mpar[x]].src;
      }
      auto [dnode, dedge] = mseed[x];
      std::vector<std::uint32_t> access = acc.path(dnode);
      access.push_back(dedge);
      std::reverse(tail.begin(), tail.end());
      access.insert(access.end(), tail.begin(), tail.end());
      return found(oracle_witness(t, g, q1, sq, access, cyc));
    }
  }
  return result;
}

std::string describe(const Transducer& t, const WtpWitness& w) {
  return "q1=" + t.labels[w.q1] + " q2=" + t.labels[w.q2] + " u=" + show(w.u) +
         " v=" + show(w.v) + " u1=" + show(w.u1) + " u2=" + show(w.u2) +
         " v1=" + show(w.v1) + " v2=" + show(w.v2);
}

std::string describe(const Transducer& t, const TpWitness& w) {
  return "i1=" + t.labels[w.i1] + " i2=" + t.labels[w.i2] + " q1=" +
         t.labels[w.q1] + " q2=" + t.labels[w.q2] + " u=" + show(w.u) +
         " v=" + show(w.v) + " u1=" + show(w.u1) + " u2=" + show(w.u2) +
         " v1=" + show(w.v1) + " v2=" + show(w.v2);
}

}  // namespace mseq
