#include <algorithm>

#include "doctest.h"
#include "mseq/core.hpp"
#include "mseq/determinize.hpp"

using namespace mseq;

namespace {

// Residuals of a subset state after prefix stripping share no letter.
bool residuals_have_empty_common_prefix(const SubsetState& u) {
  if (u.pairs.empty()) return true;
  char first = 0;
  bool any_empty = false, seen = false;
  for (const auto& [q, w] : u.pairs) {
    if (w.empty()) {
      any_empty = true;
    } else if (!seen) {
      first = w.front();
      seen = true;
    } else if (w.front() != first) {
      return true;
    }
  }
  return any_empty || !seen;
}

}  // namespace

TEST_CASE("deterministic machines determinize to themselves") {
  for (const std::string& name : {"t_a", "t_blank"}) {
    CAPTURE(name);
    const Transducer& t = fixture(name);
    DetExpansion r = determinize(t);
    CHECK(r.exhausted);
    CHECK(r.machine.num_states() == t.num_states());
    CHECK(is_sequential(r.machine));
    for (const Word& u : {Word{""}, Word{"a"}, Word{"ab"}, Word{"abba"}}) {
      if (t.input_alphabet.contains_word(u)) {
        CHECK(evaluate(r.machine, u) == evaluate(t, u));
      }
    }
  }
}

TEST_CASE("unbounded delays stop the plain subset construction") {
  // Both machines have diverging residuals, so the construction hits the
  // residual length bound instead of closing.
  CHECK(!determinize(fixture("t_swap")).exhausted);
  CHECK(!determinize(fixture("t_fig2")).exhausted);
}

TEST_CASE("subset residuals are prefix-stripped") {
  for (const auto& [name, t] : fixtures()) {
    CAPTURE(name);
    DetExpansion r = determinize(t, {200, 50});
    for (const SubsetState& u : r.subset_of) {
      CHECK(residuals_have_empty_common_prefix(u));
    }
  }
}

TEST_CASE("subset labels") {
  const Transducer& t = fixture("t_fig2");
  SubsetState u = initial_subset(t);
  CHECK(subset_label(t, u) == "{(q0,-)}");
  auto step = det_step(t, u, 'a');
  REQUIRE(step.has_value());
  CHECK(step->first.empty());
  CHECK(subset_label(t, step->second) == "{(q1,a),(q2,b)}");
  CHECK(!det_step(t, u, 'b').has_value());
}
