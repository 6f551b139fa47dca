#include "doctest.h"
#include "mseq/core.hpp"
#include "mseq/decompose.hpp"
#include "mseq/stream.hpp"

using namespace mseq;

namespace {

std::set<Word> stream_once(const Decomposition& d, const Word& u) {
  StreamSession session(d, advisory_bits(d, u));
  for (char c : u) session.push(c);
  return session.close();
}

}  // namespace

TEST_CASE("streaming equals batch evaluation") {
  for (const std::string& name : {"t_fig2", "t_swap", "t_blank"}) {
    CAPTURE(name);
    const Transducer& t = fixture(name);
    Decomposition d = decompose(t);
    std::vector<Word> frontier{""};
    for (int len = 0; len <= 6; ++len) {
      std::vector<Word> next;
      for (const Word& u : frontier) {
        CHECK(stream_once(d, u) == evaluate(t, u));
        if (len < 6) {
          for (char c : t.input_alphabet.letters()) next.push_back(u + c);
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST_CASE("working cells stay constant while streaming") {
  Decomposition d = decompose(fixture("t_swap"));
  std::size_t expected = 0;
  for (std::size_t n = 2; n <= 300; ++n) {
    Word u(n, 'a');
    StreamSession session(d, advisory_bits(d, u));
    if (expected == 0) expected = session.working_cells();
    CHECK(session.working_cells() == expected);
    for (char c : u) {
      session.push(c);
      CHECK(session.working_cells() == expected);
    }
    CHECK(session.close() == evaluate(fixture("t_swap"), u));
  }
}

TEST_CASE("channels only ever grow at the end") {
  Decomposition d = decompose(fixture("t_fig2"));
  Word u = "aabaaaa";
  StreamSession session(d, advisory_bits(d, u));
  std::vector<Word> prev(session.channels());
  for (char c : u) {
    session.push(c);
    const auto& now = session.channels();
    REQUIRE(now.size() == prev.size());
    for (std::size_t i = 0; i < now.size(); ++i) {
      CHECK(now[i].compare(0, prev[i].size(), prev[i]) == 0);
    }
    prev = now;
  }
}

TEST_CASE("inconsistent advisory bits surface as errors") {
  Decomposition d = decompose(fixture("t_swap"));
  // Enable every part for a word outside the domain of some of them.
  std::vector<bool> all(d.parts.size(), true);
  StreamSession session(d, all);
  bool dead = false, nonfinal = false;
  try {
    for (char c : Word{"ab"}) session.push(c);
    session.close();
  } catch (const DeadPartError&) {
    dead = true;
  } catch (const NotFinalError&) {
    nonfinal = true;
  }
  CHECK((dead || nonfinal));
}

TEST_CASE("advisory bits match per-part acceptance") {
  const Transducer& t = fixture("t_fig2");
  Decomposition d = decompose(t);
  for (const Word& u : {Word{""}, Word{"aaaa"}, Word{"ab"}, Word{"aab"}}) {
    std::vector<bool> bits = advisory_bits(d, u);
    REQUIRE(bits.size() == d.parts.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      CHECK(bits[i] == accepts(d.parts[i], u));
    }
  }
}
