#include <algorithm>
#include <random>

#include "doctest.h"
#include "mseq/core.hpp"
#include "mseq/graph.hpp"
#include "mseq/isomorphism.hpp"
#include "mseq/randgen.hpp"

using namespace mseq;

TEST_CASE("component ids are reverse topological") {
  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    SccIndex index = scc(t);
    for (const Edge& e : t.edges) {
      CHECK(index.scc_of[e.src] >= index.scc_of[e.dst]);
    }
    std::size_t total = 0;
    for (const auto& comp : index.components) total += comp.size();
    CHECK(total == t.num_states());
  }
}

TEST_CASE("condensation of the three-block machine") {
  const Transducer& t = fixture("t_fig2");
  SccIndex index = scc(t);
  CHECK(index.size() == 3);  // {q0,q1,q2}, {q3}, {q4}
  CHECK(transient_edges(t, index).size() == 2);

  // Prefix-closed chains from the initial component: empty, one hop, two.
  CHECK(condensation_paths(t, index).size() == 3);

  // Only the full chain survives trimming: finals live in the last block.
  std::vector<Transducer> parts = split_parts(t);
  REQUIRE(parts.size() == 1);
  CHECK(isomorphic(parts[0], t));
}

TEST_CASE("split preserves the relation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter(0, 1);
  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    Transducer s = split(t);
    CHECK_NOTHROW(validate(s));
    Word u;
    for (int len = 0; len <= 6; ++len) {
      u.clear();
      for (int i = 0; i < len; ++i) {
        const std::string& letters = t.input_alphabet.letters();
        u.push_back(letters[static_cast<std::size_t>(letter(rng)) % letters.size()]);
      }
      CHECK(evaluate(s, u) == evaluate(t, u));
    }
  }
}

TEST_CASE("split parts have linear condensations") {
  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    for (const Transducer& part : split_parts(t)) {
      // Within one part every same-source same-letter conflict is either
      // kept intact (intra-component) or resolved; no transient edge
      // branches remain beyond the chosen chain.
      SccIndex index = scc(part);
      auto trans = transient_edges(part, index);
      std::set<std::uint32_t> sources;
      for (std::size_t ei : trans) {
        CHECK(sources.insert(index.scc_of[part.edges[ei].src]).second);
      }
    }
  }
}

TEST_CASE("separability") {
  // Branching inside one component on the same letter is inseparable.
  CHECK(!is_separable(fixture("t_swap")));
  CHECK(!is_separable(fixture("t_fig2")));
  // Deterministic machines are trivially separable.
  CHECK(is_separable(fixture("t_a")));
  CHECK(is_separable(fixture("t_blank")));
}

TEST_CASE("choice copies realise multi-valued finals") {
  Transducer t;
  t.name = "pairs";
  t.input_alphabet = Alphabet("a");
  t.output_alphabet = Alphabet("xy");
  t.add_state();
  t.initials = {0};
  t.finals[0] = {"x", "y"};
  t.edges = {{0, 'a', "x", 0}};

  Transducer u = multi_to_union(t);
  CHECK(u.single_valued());
  for (const Word& w : {Word{""}, Word{"a"}, Word{"aa"}}) {
    CHECK(evaluate(u, w) == evaluate(t, w));
  }
}

TEST_CASE("choice explosion is reported") {
  Transducer t;
  t.input_alphabet = Alphabet("a");
  t.output_alphabet = Alphabet("ab");
  for (int i = 0; i < 3; ++i) t.add_state();
  t.initials = {0};
  t.edges = {{0, 'a', "", 1}, {1, 'a', "", 2}, {2, 'a', "", 0}};
  for (State q = 0; q < 3; ++q) t.finals[q] = {"a", "b"};
  CHECK_THROWS_AS(multi_to_union(t, 4), BoundExceededError);
}
