#include <set>

#include "doctest.h"
#include "mseq/core.hpp"

using namespace mseq;

TEST_CASE("fixtures are valid and trim") {
  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    CHECK_NOTHROW(validate(t));
    Transducer trimmed = trim(t);
    CHECK(trimmed.num_states() == t.num_states());
    CHECK(trimmed.edges.size() == t.edges.size());
  }
}

TEST_CASE("validate rejects broken structures") {
  Transducer t;
  t.input_alphabet = Alphabet("ab");
  t.output_alphabet = Alphabet("ab");
  t.add_state();

  SUBCASE("dangling edge endpoint") {
    t.initials = {0};
    t.finals[0] = {""};
    t.edges.push_back({0, 'a', "", 7});
    CHECK_THROWS_AS(validate(t), ValidationError);
  }
  SUBCASE("input letter outside the alphabet") {
    t.initials = {0};
    t.finals[0] = {""};
    t.edges.push_back({0, 'z', "", 0});
    CHECK_THROWS_AS(validate(t), ValidationError);
  }
  SUBCASE("output word outside the alphabet") {
    t.initials = {0};
    t.finals[0] = {""};
    t.edges.push_back({0, 'a', "zz", 0});
    CHECK_THROWS_AS(validate(t), ValidationError);
  }
  SUBCASE("unknown initial state") {
    t.initials = {3};
    CHECK_THROWS_AS(validate(t), ValidationError);
  }
  SUBCASE("empty final output set") {
    t.initials = {0};
    t.finals[0] = {};
    CHECK_THROWS_AS(validate(t), ValidationError);
  }
}

TEST_CASE("trim drops inaccessible and non-co-accessible states") {
  Transducer t;
  t.input_alphabet = Alphabet("a");
  t.output_alphabet = Alphabet("a");
  for (int i = 0; i < 4; ++i) t.add_state();
  t.initials = {0};
  t.finals[1] = {""};
  t.edges = {{0, 'a', "a", 1},   // useful
             {0, 'a', "", 2},    // 2 is a dead end
             {3, 'a', "", 1}};   // 3 is unreachable
  Transducer r = trim(t);
  CHECK(r.num_states() == 2);
  CHECK(r.edges.size() == 1);
  CHECK(evaluate(r, "a") == evaluate(t, "a"));

  // Idempotence.
  Transducer rr = trim(r);
  CHECK(rr.num_states() == r.num_states());
  CHECK(rr.edges == r.edges);
}

TEST_CASE("evaluate on the swap machine") {
  const Transducer& t = fixture("t_swap");
  CHECK(evaluate(t, "aa") == std::set<Word>{"aa"});
  CHECK(evaluate(t, "aaaa") == std::set<Word>{"aaaa"});
  CHECK(evaluate(t, "ab") == std::set<Word>{"ba"});
  CHECK(evaluate(t, "aaab") == std::set<Word>{"baaa"});
  CHECK(evaluate(t, "a").empty());
  CHECK(evaluate(t, "b").empty());
  CHECK(accepts(t, "aab"));
  CHECK(!accepts(t, "ba"));
}

TEST_CASE("evaluate collects all run outputs") {
  const Transducer& t = fixture("t_fig2");
  CHECK(evaluate(t, "aaaa") == std::set<Word>{"abaa", "baaa"});
  CHECK(evaluate(t, "aabaaaa") == std::set<Word>{"ababaa", "abbaaa"});
}

TEST_CASE("union is the union of the relations") {
  const Transducer& a = fixture("t_swap");
  const Transducer& b = fixture("t_blank");
  Transducer u = union_of({a, b});
  CHECK_NOTHROW(validate(u));
  CHECK(u.num_states() == a.num_states() + b.num_states());
  for (const Word& w : {Word{"aa"}, Word{"ab"}, Word{"abba"}, Word{""}}) {
    std::set<Word> expect = evaluate(a, w);
    for (const Word& o : evaluate(b, w)) expect.insert(o);
    CHECK(evaluate(u, w) == expect);
  }
}

TEST_CASE("sequentiality and output bounds") {
  CHECK(is_sequential(fixture("t_a")));
  CHECK(is_sequential(fixture("t_blank")));
  CHECK(!is_sequential(fixture("t_swap")));     // two a-edges at the start
  CHECK(!is_sequential(fixture("t_fig2")));
  CHECK(max_output_len(fixture("t_swap")) == 2);
  CHECK(max_output_len(fixture("t_a")) == 1);
  CHECK(max_output_len(fixture("t_blank")) == 2);
}
