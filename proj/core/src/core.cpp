#include "mseq/core.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace mseq {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  std::sort(letters_.begin(), letters_.end());
  letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

bool Alphabet::contains(char c) const {
  return std::binary_search(letters_.begin(), letters_.end(), c);
}

bool Alphabet::contains_word(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
}

bool Transducer::is_initial(State q) const {
  return std::binary_search(initials.begin(), initials.end(), q);
}

bool Transducer::single_valued() const {
  return std::all_of(finals.begin(), finals.end(),
                     [](const auto& kv) { return kv.second.size() == 1; });
}

State Transducer::add_state(std::string label) {
  State q = static_cast<State>(labels.size());
  if (label.empty()) label = "s" + std::to_string(q);
  labels.push_back(std::move(label));
  return q;
}

Word Run::input() const {
  Word w;
  for (const Edge& e : edges) w.push_back(e.input);
  return w;
}

Word Run::output() const {
  Word w;
  for (const Edge& e : edges) w += e.output;
  return w;
}

void validate(const Transducer& t) {
  const std::size_t n = t.num_states();
  auto check_state = [&](State q, const char* what) {
    if (q >= n) {
      throw ValidationError(std::string(what) + " references unknown state id " +
                            std::to_string(q));
    }
  };
  for (State q : t.initials) check_state(q, "initial");
  if (!std::is_sorted(t.initials.begin(), t.initials.end()) ||
      std::adjacent_find(t.initials.begin(), t.initials.end()) != t.initials.end()) {
    throw ValidationError("initial state list is not sorted and duplicate-free");
  }
  for (const auto& [q, words] : t.finals) {
    check_state(q, "final");
    if (words.empty()) {
      throw ValidationError("final state " + std::to_string(q) +
                            " has an empty output set");
    }
    if (!std::is_sorted(words.begin(), words.end()) ||
        std::adjacent_find(words.begin(), words.end()) != words.end()) {
      throw ValidationError("final output set of state " + std::to_string(q) +
                            " is not sorted and duplicate-free");
    }
    for (const Word& w : words) {
      if (!t.output_alphabet.contains_word(w)) {
        throw ValidationError("final output of state " + std::to_string(q) +
                              " uses a letter outside the output alphabet");
      }
    }
  }
  for (const Edge& e : t.edges) {
    check_state(e.src, "edge source");
    check_state(e.dst, "edge target");
    if (!t.input_alphabet.contains(e.input)) {
      throw ValidationError("edge input letter is outside the input alphabet");
    }
    if (!t.output_alphabet.contains_word(e.output)) {
      throw ValidationError("edge output uses a letter outside the output alphabet");
    }
  }
}

std::vector<std::vector<std::size_t>> adjacency(const Transducer& t) {
  std::vector<std::vector<std::size_t>> adj(t.num_states());
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    adj[t.edges[i].src].push_back(i);
  }
  return adj;
}

Transducer trim(const Transducer& t, std::vector<std::int64_t>& old_to_new) {
  const std::size_t n = t.num_states();
  std::vector<bool> accessible(n, false), coaccessible(n, false);

  std::deque<State> queue;
  for (State q : t.initials) {
    if (!accessible[q]) {
      accessible[q] = true;
      queue.push_back(q);
    }
  }
  auto adj = adjacency(t);
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (std::size_t ei : adj[q]) {
      State d = t.edges[ei].dst;
      if (!accessible[d]) {
        accessible[d] = true;
        queue.push_back(d);
      }
    }
  }

  std::vector<std::vector<State>> rev(n);
  for (const Edge& e : t.edges) rev[e.dst].push_back(e.src);
  for (const auto& [q, words] : t.finals) {
    if (!coaccessible[q]) {
      coaccessible[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State s : rev[q]) {
      if (!coaccessible[s]) {
        coaccessible[s] = true;
        queue.push_back(s);
      }
    }
  }

  old_to_new.assign(n, -1);
  Transducer out;
  out.name = t.name;
  out.input_alphabet = t.input_alphabet;
  out.output_alphabet = t.output_alphabet;
  for (State q = 0; q < n; ++q) {
    if (accessible[q] && coaccessible[q]) {
      old_to_new[q] = static_cast<std::int64_t>(out.add_state(t.labels[q]));
    }
  }
  for (State q : t.initials) {
    if (old_to_new[q] >= 0) out.initials.push_back(static_cast<State>(old_to_new[q]));
  }
  for (const auto& [q, words] : t.finals) {
    if (old_to_new[q] >= 0) out.finals[static_cast<State>(old_to_new[q])] = words;
  }
  for (const Edge& e : t.edges) {
    if (old_to_new[e.src] >= 0 && old_to_new[e.dst] >= 0) {
      out.edges.push_back({static_cast<State>(old_to_new[e.src]), e.input, e.output,
                           static_cast<State>(old_to_new[e.dst])});
    }
  }
  return out;
}

Transducer trim(const Transducer& t) {
  std::vector<std::int64_t> unused;
  return trim(t, unused);
}

std::set<Word> evaluate(const Transducer& t, const Word& u) {
  std::set<std::pair<State, Word>> frontier;
  for (State q : t.initials) frontier.insert({q, Word{}});
  auto adj = adjacency(t);
  for (char c : u) {
    std::set<std::pair<State, Word>> next;
    for (const auto& [q, w] : frontier) {
      for (std::size_t ei : adj[q]) {
        const Edge& e = t.edges[ei];
        if (e.input == c) next.insert({e.dst, w + e.output});
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::set<Word> outputs;
  for (const auto& [q, w] : frontier) {
    auto it = t.finals.find(q);
    if (it == t.finals.end()) continue;
    for (const Word& z : it->second) outputs.insert(w + z);
  }
  return outputs;
}

bool accepts(const Transducer& t, const Word& u) {
  std::set<State> frontier(t.initials.begin(), t.initials.end());
  auto adj = adjacency(t);
  for (char c : u) {
    std::set<State> next;
    for (State q : frontier) {
      for (std::size_t ei : adj[q]) {
        if (t.edges[ei].input == c) next.insert(t.edges[ei].dst);
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return false;
  }
  return std::any_of(frontier.begin(), frontier.end(),
                     [&](State q) { return t.is_final(q); });
}

Transducer union_of(const std::vector<Transducer>& ts) {
  Transducer out;
  out.name = "union";
  if (!ts.empty()) {
    out.input_alphabet = ts.front().input_alphabet;
    out.output_alphabet = ts.front().output_alphabet;
  }
  for (const Transducer& t : ts) {
    if (t.input_alphabet != out.input_alphabet ||
        t.output_alphabet != out.output_alphabet) {
      throw ValidationError("union requires matching alphabets");
    }
    State base = static_cast<State>(out.num_states());
    for (State q = 0; q < t.num_states(); ++q) out.add_state(t.labels[q]);
    for (State q : t.initials) out.initials.push_back(base + q);
    for (const auto& [q, words] : t.finals) out.finals[base + q] = words;
    for (const Edge& e : t.edges) {
      out.edges.push_back({base + e.src, e.input, e.output, base + e.dst});
    }
  }
  std::sort(out.initials.begin(), out.initials.end());
  return out;
}

std::size_t max_output_len(const Transducer& t) {
  std::size_t m = 0;
  for (const Edge& e : t.edges) m = std::max(m, e.output.size());
  for (const auto& [q, words] : t.finals) {
    for (const Word& w : words) m = std::max(m, w.size());
  }
  return m;
}

bool is_sequential(const Transducer& t) {
  if (t.initials.size() > 1) return false;
  std::set<std::pair<State, char>> seen;
  for (const Edge& e : t.edges) {
    if (!seen.insert({e.src, e.input}).second) return false;
  }
  return t.single_valued();
}

namespace {

struct FixtureEdge {
  const char* src;
  char input;
  const char* output;
  const char* dst;
};

Transducer make_fixture(const char* name, const char* in, const char* out,
                        std::vector<const char*> states,
                        std::vector<const char*> inits,
                        std::vector<std::pair<const char*, const char*>> fins,
                        std::vector<FixtureEdge> edges) {
  Transducer t;
  t.name = name;
  t.input_alphabet = Alphabet(in);
  t.output_alphabet = Alphabet(out);
  std::map<std::string, State> by_label;
  for (const char* s : states) by_label[s] = t.add_state(s);
  for (const char* s : inits) t.initials.push_back(by_label.at(s));
  std::sort(t.initials.begin(), t.initials.end());
  for (const auto& [s, w] : fins) t.finals[by_label.at(s)] = {Word(w)};
  for (const FixtureEdge& e : edges) {
    t.edges.push_back({by_label.at(e.src), e.input, Word(e.output), by_label.at(e.dst)});
  }
  return t;
}

std::map<std::string, Transducer> build_fixtures() {
  std::map<std::string, Transducer> m;

  m["t_a"] = make_fixture("t_a", "a", "ab", {"q0", "q1"}, {"q0"}, {{"q1", "b"}},
                          {{"q0", 'a', "", "q1"}, {"q1", 'a', "a", "q1"}});

  m["t_blank"] = make_fixture("t_blank", "ab", "ab", {"q0", "q1"}, {"q0"},
                              {{"q0", ""}, {"q1", ""}},
                              {{"q0", 'a', "a", "q0"},
                               {"q0", 'b', "", "q1"},
                               {"q1", 'b', "", "q1"},
                               {"q1", 'a', "ba", "q0"}});

  m["t_swap"] = make_fixture("t_swap", "ab", "ab", {"q0", "q1", "q2", "q3"}, {"q0"},
                             {{"q3", ""}},
                             {{"q0", 'a', "aa", "q1"},
                              {"q0", 'a', "ba", "q2"},
                              {"q1", 'a', "a", "q1"},
                              {"q1", 'a', "", "q3"},
                              {"q2", 'a', "a", "q2"},
                              {"q2", 'b', "", "q3"}});

  m["t_swap_star"] = make_fixture("t_swap_star", "ab#", "ab#",
                                  {"q0", "q1", "q2", "q3"}, {"q0"}, {{"q3", ""}},
                                  {{"q0", 'a', "aa", "q1"},
                                   {"q0", 'a', "ba", "q2"},
                                   {"q1", 'a', "a", "q1"},
                                   {"q1", 'a', "", "q3"},
                                   {"q2", 'a', "a", "q2"},
                                   {"q2", 'b', "", "q3"},
                                   {"q3", '#', "#", "q0"}});

  m["t_fig2"] = make_fixture("t_fig2", "ab", "ab", {"q0", "q1", "q2", "q3", "q4"},
                             {"q0"}, {{"q4", ""}},
                             {{"q0", 'a', "a", "q1"},
                              {"q0", 'a', "b", "q2"},
                              {"q1", 'a', "b", "q2"},
                              {"q2", 'b', "", "q0"},
                              {"q2", 'a', "a", "q3"},
                              {"q3", 'a', "a", "q4"},
                              {"q4", 'a', "a", "q4"}});

  m["t1_appendix"] = make_fixture("t1_appendix", "ab", "ab",
                                  {"q0", "q1", "q2", "q3", "q4", "q5"}, {"q0"},
                                  {{"q5", ""}},
                                  {{"q0", 'a', "a", "q1"},
                                   {"q0", 'a', "b", "q2"},
                                   {"q1", 'a', "", "q2"},
                                   {"q2", 'b', "", "q0"},
                                   {"q2", 'a', "", "q3"},
                                   {"q3", 'a', "", "q4"},
                                   {"q3", 'a', "", "q5"},
                                   {"q4", 'a', "", "q5"},
                                   {"q5", 'b', "a", "q3"}});

  m["t2_appendix"] = make_fixture("t2_appendix", "ab", "ab",
                                  {"q0", "q1", "q2", "q3", "q4", "q5", "q6"}, {"q0"},
                                  {{"q6", ""}},
                                  {{"q0", 'a', "a", "q1"},
                                   {"q1", 'a', "a", "q2"},
                                   {"q0", 'a', "b", "q3"},
                                   {"q1", 'a', "b", "q3"},
                                   {"q2", 'a', "b", "q3"},
                                   {"q3", 'b', "", "q0"},
                                   {"q3", 'a', "a", "q4"},
                                   {"q4", 'a', "a", "q5"},
                                   {"q5", 'a', "a", "q6"},
                                   {"q6", 'a', "a", "q6"}});

  return m;
}

}  // namespace

const std::map<std::string, Transducer>& fixtures() {
  static const std::map<std::string, Transducer> m = build_fixtures();
  return m;
}

const Transducer& fixture(const std::string& name) {
  const auto& m = fixtures();
  auto it = m.find(name);
  if (it == m.end()) throw std::out_of_range("unknown fixture: " + name);
  return it->second;
}

}  // namespace mseq
