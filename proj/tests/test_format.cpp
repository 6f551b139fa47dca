#include "doctest.h"
#include "mseq/core.hpp"
#include "mseq/format.hpp"
#include "mseq/isomorphism.hpp"
#include "mseq/randgen.hpp"

using namespace mseq;

TEST_CASE("round-trip is the identity up to renaming") {
  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    CHECK(isomorphic(parse(serialize(t)), t));
  }
  for (const Transducer& t : random_corpus(99, 50)) {
    CAPTURE(t.name);
    CHECK(isomorphic(parse(serialize(t)), t));
  }
}

TEST_CASE("serialisation is canonical") {
  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    CHECK(serialize(parse(serialize(t))) == serialize(t));
  }
}

TEST_CASE("comments, blanks and the empty-word marker") {
  std::string text =
      "# a machine with comments\n"
      "fst demo\n"
      "in ab\n"
      "out ab\n"
      "\n"
      "state s0 init final - ab\n"
      "state s1\n"
      "edge s0 a - s1\n"
      "edge s1 b ab s0\n"
      "  # indented comment\n";
  Transducer t = parse(text);
  CHECK(t.num_states() == 2);
  CHECK(t.edges.size() == 2);
  CHECK(t.edges[0].output.empty());
  CHECK(t.finals.at(0) == std::vector<Word>{"", "ab"});
}

TEST_CASE("a hash can be an alphabet letter") {
  Transducer t = fixture("t_swap_star");
  CHECK(t.input_alphabet.contains('#'));
  Transducer back = parse(serialize(t));
  CHECK(isomorphic(back, t));
}

TEST_CASE("multi-document separator") {
  std::string text = serialize(fixture("t_a")) + "---\n" + serialize(fixture("t_blank"));
  std::vector<Transducer> docs = parse_multi(text);
  REQUIRE(docs.size() == 2);
  CHECK(isomorphic(docs[0], fixture("t_a")));
  CHECK(isomorphic(docs[1], fixture("t_blank")));
  CHECK(serialize_multi(docs) == serialize(docs[0]) + "---\n" + serialize(docs[1]));
}

TEST_CASE("parse errors carry line numbers") {
  auto check_line = [](const std::string& text, std::size_t line) {
    try {
      parse(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  check_line("bogus x\n", 1);
  check_line("fst t\nin ab\nout ab\nstate q\nstate q\n", 5);
  check_line("fst t\nin ab\nout ab\nstate q init final -\nedge q c - q\n", 5);
  check_line("fst t\nin ab\nout ab\nstate q init final -\nedge q a - r\n", 5);
}

TEST_CASE("edges must consume one input letter") {
  std::string text =
      "fst t\nin ab\nout ab\nstate q init final -\nedge q - a q\n";
  try {
    parse(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("real-time") != std::string::npos);
  }
}

TEST_CASE("alphabet declarations are required") {
  CHECK_THROWS_AS(parse("fst t\nout ab\nstate q init final -\n"), ParseError);
  CHECK_THROWS_AS(parse("fst t\nin ab\nstate q init final -\n"), ParseError);
}
