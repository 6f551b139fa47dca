#include <random>

#include "doctest.h"
#include "mseq/freegroup.hpp"

using namespace mseq;

namespace {

GroupWord gw(const std::string& spec) {
  // "a b' c" -> a b^-1 c
  std::vector<SignedLetter> raw;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i] == ' ') continue;
    bool inv = i + 1 < spec.size() && spec[i + 1] == '\'';
    raw.push_back({spec[i], inv});
    if (inv) ++i;
  }
  return GroupWord::reduce(raw);
}

}  // namespace

TEST_CASE("reduction cancels adjacent inverse pairs") {
  CHECK(gw("a a'").empty());
  CHECK(gw("a' a").empty());
  CHECK(gw("a b b' a'").empty());
  CHECK(gw("a b b' c") == gw("a c"));
  CHECK(gw("a b c") == GroupWord::embed("abc"));
}

TEST_CASE("group axioms") {
  GroupWord e;
  std::vector<GroupWord> sample = {e, gw("a"), gw("a'"), gw("a b'"),
                                   gw("b a c'"), GroupWord::embed("abba")};
  for (const auto& x : sample) {
    CHECK(x.concat(e) == x);
    CHECK(e.concat(x) == x);
    CHECK(x.concat(x.inverse()) == e);
    CHECK(x.inverse().concat(x) == e);
    CHECK(x.inverse().inverse() == x);
    for (const auto& y : sample) {
      CHECK(x.concat(y).inverse() == y.inverse().concat(x.inverse()));
      for (const auto& z : sample) {
        CHECK(x.concat(y).concat(z) == x.concat(y.concat(z)));
      }
    }
  }
}

TEST_CASE("worked inverses and delays") {
  CHECK(delay("ab", "acd") == gw("b' c d"));
  CHECK(gw("a' b c").inverse() == gw("c' b' a"));
  CHECK(delay("abc", "abc").empty());
  CHECK(delay("", "ab") == gw("a b"));
  CHECK(delay("ab", "") == gw("b' a'"));
  CHECK(delay("ab", "a") == gw("b'"));
}

TEST_CASE("delay length equals |v| + |w| - 2|lcp|") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> letter(0, 1);
  auto word = [&] {
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(letter(rng) ? 'b' : 'a');
    return w;
  };
  for (int it = 0; it < 10000; ++it) {
    Word v = word(), w = word();
    std::size_t lcp = 0;
    while (lcp < v.size() && lcp < w.size() && v[lcp] == w[lcp]) ++lcp;
    CHECK(glen(delay(v, w)) == v.size() + w.size() - 2 * lcp);
  }
}

TEST_CASE("display form") {
  CHECK(GroupWord().str() == "-");
  CHECK(gw("a b' c").str() == "ab^-1c");
}
