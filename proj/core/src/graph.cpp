#include "mseq/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mseq/core.hpp"

namespace mseq {

SccIndex scc(const Transducer& t) {
  const std::size_t n = t.num_states();
  SccIndex index;
  index.scc_of.assign(n, 0);

  std::vector<std::vector<State>> succ(n);
  for (const Edge& e : t.edges) succ[e.src].push_back(e.dst);

  // Iterative Tarjan. Components are popped callees-first, so ids end up
  // in reverse topological order.
  constexpr std::uint32_t kUnvisited = 0xffffffff;
  std::vector<std::uint32_t> low(n, 0), num(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<State> stack;
  std::uint32_t counter = 0;

  struct Frame {
    State q;
    std::size_t next_child;
  };
  std::vector<Frame> call;

  for (State root = 0; root < n; ++root) {
    if (num[root] != kUnvisited) continue;
    call.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_child < succ[f.q].size()) {
        State w = succ[f.q][f.next_child++];
        if (num[w] == kUnvisited) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.q] = std::min(low[f.q], num[w]);
        }
      } else {
        if (low[f.q] == num[f.q]) {
          std::vector<State> comp;
          State w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            index.scc_of[w] = static_cast<std::uint32_t>(index.components.size());
            comp.push_back(w);
          } while (w != f.q);
          std::sort(comp.begin(), comp.end());
          index.components.push_back(std::move(comp));
        }
        State done = f.q;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().q] = std::min(low[call.back().q], low[done]);
        }
      }
    }
  }
  return index;
}

std::vector<std::size_t> transient_edges(const Transducer& t, const SccIndex& index) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (index.scc_of[t.edges[i].src] != index.scc_of[t.edges[i].dst]) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<CondensationPath> condensation_paths(const Transducer& t,
                                                 const SccIndex& index) {
  std::vector<std::vector<std::size_t>> by_source(index.size());
  for (std::size_t ei : transient_edges(t, index)) {
    by_source[index.scc_of[t.edges[ei].src]].push_back(ei);
  }

  std::set<std::uint32_t> initial_components;
  for (State q : t.initials) initial_components.insert(index.scc_of[q]);

  std::vector<CondensationPath> paths;
  for (std::uint32_t start : initial_components) {
    // Depth-first enumeration; the condensation is acyclic so this
    // terminates, emitting every prefix as its own path.
    std::vector<std::pair<std::uint32_t, std::vector<std::size_t>>> todo;
    todo.push_back({start, {}});
    while (!todo.empty()) {
      auto [comp, chain] = std::move(todo.back());
      todo.pop_back();
      paths.push_back({start, chain});
      for (auto it = by_source[comp].rbegin(); it != by_source[comp].rend(); ++it) {
        auto extended = chain;
        extended.push_back(*it);
        todo.push_back({index.scc_of[t.edges[*it].dst], std::move(extended)});
      }
    }
  }
  return paths;
}

std::vector<CondensationPath> condensation_paths(const Transducer& t) {
  return condensation_paths(t, scc(t));
}

Transducer path_restriction(const Transducer& t, const SccIndex& index,
                            const CondensationPath& path) {
  std::set<std::size_t> keep(path.edges.begin(), path.edges.end());
  Transducer sub;
  sub.name = t.name;
  sub.input_alphabet = t.input_alphabet;
  sub.output_alphabet = t.output_alphabet;
  sub.labels = t.labels;
  // Runs following this path start in its first component; keep only the
  // initial states located there.
  for (State q : t.initials) {
    if (index.scc_of[q] == path.start_component) sub.initials.push_back(q);
  }
  sub.finals = t.finals;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const Edge& e = t.edges[i];
    if (index.scc_of[e.src] == index.scc_of[e.dst] || keep.contains(i)) {
      sub.edges.push_back(e);
    }
  }
  return trim(sub);
}

std::vector<Transducer> split_parts(const Transducer& t) {
  SccIndex index = scc(t);
  std::vector<Transducer> parts;
  for (const CondensationPath& p : condensation_paths(t, index)) {
    Transducer part = path_restriction(t, index, p);
    if (part.num_states() > 0) parts.push_back(std::move(part));
  }
  return parts;
}

Transducer split(const Transducer& t) {
  Transducer out = union_of(split_parts(t));
  out.name = t.name;
  out.input_alphabet = t.input_alphabet;
  out.output_alphabet = t.output_alphabet;
  return out;
}

bool is_separable(const Transducer& t) {
  if (t.initials.size() > 1) return false;
  SccIndex index = scc(t);
  std::map<std::pair<State, char>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    groups[{t.edges[i].src, t.edges[i].input}].push_back(i);
  }
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    for (std::size_t ei : members) {
      if (index.scc_of[t.edges[ei].src] == index.scc_of[t.edges[ei].dst]) {
        return false;
      }
    }
  }
  return true;
}

Transducer multi_to_union(const Transducer& t, std::size_t max_copies) {
  std::vector<State> multi_finals;
  std::size_t copies = 1;
  for (const auto& [q, words] : t.finals) {
    if (words.size() > 1) {
      multi_finals.push_back(q);
      if (copies > max_copies / words.size()) {
        throw BoundExceededError("multi_to_union: choice-function fan-out above " +
                                 std::to_string(max_copies));
      }
      copies *= words.size();
    }
  }
  if (multi_finals.empty()) {
    Transducer out = t;
    return out;
  }

  std::vector<Transducer> members;
  std::vector<std::size_t> choice(multi_finals.size(), 0);
  for (;;) {
    Transducer copy = t;
    for (std::size_t i = 0; i < multi_finals.size(); ++i) {
      copy.finals[multi_finals[i]] = {t.finals.at(multi_finals[i])[choice[i]]};
    }
    members.push_back(std::move(copy));
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < t.finals.at(multi_finals[i]).size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  Transducer out = union_of(members);
  out.name = t.name;
  return out;
}

}  // namespace mseq
