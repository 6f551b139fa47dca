#include "mseq/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "mseq/core.hpp"
#include "mseq/graph.hpp"
#include "mseq/isomorphism.hpp"
#include "mseq/weakdet.hpp"

namespace mseq {

namespace {

// All single-valued copies of a multi-valued part, one per choice
// function over its final output sets.
std::vector<Transducer> choice_copies(const Transducer& t, std::size_t max_copies) {
  std::vector<State> multi;
  std::size_t copies = 1;
  for (const auto& [q, words] : t.finals) {
    if (words.size() > 1) {
      multi.push_back(q);
      if (copies > max_copies / words.size()) {
        throw BoundExceededError("decompose: choice-function fan-out above " +
                                 std::to_string(max_copies));
      }
      copies *= words.size();
    }
  }
  if (multi.empty()) return {t};

  std::vector<Transducer> out;
  std::vector<std::size_t> choice(multi.size(), 0);
  for (;;) {
    Transducer copy = t;
    for (std::size_t i = 0; i < multi.size(); ++i) {
      copy.finals[multi[i]] = {t.finals.at(multi[i])[choice[i]]};
    }
    out.push_back(std::move(copy));
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < t.finals.at(multi[i]).size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return out;
}

void walk_words(const Transducer& a, const Transducer& b, const std::string& letters,
                Word& u, std::size_t max_len, EquivResult& result) {
  if (!result.equivalent) return;
  if (evaluate(a, u) != evaluate(b, u)) {
    result.equivalent = false;
    result.counterexample = u;
    return;
  }
  if (u.size() == max_len) return;
  for (char c : letters) {
    u.push_back(c);
    walk_words(a, b, letters, u, max_len, result);
    u.pop_back();
    if (!result.equivalent) return;
  }
}

std::string merged_letters(const Alphabet& a, const Alphabet& b) {
  std::string all = a.letters() + b.letters();
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

Decomposition decompose(const Transducer& t, DecomposeBounds bounds) {
  validate(t);
  Transducer source = trim(t);
  WtpResult wtp = check_wtp(source);
  if (!wtp.holds) {
    throw WtpViolationError(
        "decompose: weak twinning property fails: " + describe(source, *wtp.witness),
        *wtp.witness);
  }

  Decomposition d;
  for (State i : source.initials) {
    Transducer ti = source;
    ti.initials = {i};
    ti = trim(ti);
    if (ti.num_states() == 0) continue;

    WeakDetResult w = weak_determinize(ti, bounds.det);
    if (!w.exhausted) {
      throw BoundExceededError(
          "decompose: weak determinisation hit a bound despite the weak "
          "twinning property");
    }

    SccIndex index = scc(w.machine);
    auto paths = condensation_paths(w.machine, index);
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
      Transducer part = path_restriction(w.machine, index, paths[pi]);
      if (part.num_states() == 0) continue;
      auto copies = choice_copies(part, bounds.max_copies);
      for (std::size_t ci = 0; ci < copies.size(); ++ci) {
        Transducer copy = trim(copies[ci]);
        if (copy.num_states() == 0) continue;
        if (!is_sequential(copy)) {
          throw std::logic_error("decompose: produced a non-sequential part");
        }
        bool duplicate = false;
        for (const Transducer& existing : d.parts) {
          if (isomorphic(existing, copy)) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
        copy.name = t.name + ".part" + std::to_string(d.parts.size());
        d.parts.push_back(std::move(copy));
        d.provenance.push_back({i, pi, ci});
      }
    }
  }
  return d;
}

std::set<Word> evaluate(const Decomposition& d, const Word& u) {
  std::set<Word> out;
  for (const Transducer& part : d.parts) {
    auto partial = evaluate(part, u);
    out.insert(partial.begin(), partial.end());
  }
  return out;
}

EquivResult equiv_bounded(const Transducer& a, const Transducer& b,
                          std::size_t max_len) {
  EquivResult result;
  Word u;
  walk_words(a, b, merged_letters(a.input_alphabet, b.input_alphabet), u, max_len,
             result);
  return result;
}

EquivResult equiv_bounded(const Decomposition& a, const Transducer& b,
                          std::size_t max_len) {
  Alphabet in;
  std::vector<Transducer> parts = a.parts;
  for (const Transducer& p : parts) {
    in = Alphabet(merged_letters(in, p.input_alphabet));
  }
  Transducer merged = union_of([&] {
    for (Transducer& p : parts) {
      p.input_alphabet = in;
      p.output_alphabet = b.output_alphabet;
    }
    return parts;
  }());
  merged.input_alphabet = in;
  return equiv_bounded(merged, b, max_len);
}

bool non_multiseq_certificate(const Transducer& t, const Transducer& f_sub,
                              std::size_t max_len) {
  // Bounded inclusion of f_sub in t.
  struct Walker {
    const Transducer& small;
    const Transducer& big;
    std::size_t max_len;
    void walk(Word& u) {
      auto lhs = evaluate(small, u);
      if (!lhs.empty()) {
        auto rhs = evaluate(big, u);
        if (!std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end())) {
          throw ValidationError("non_multiseq_certificate: inclusion fails on '" +
                                u + "'");
        }
      }
      if (u.size() == max_len) return;
      for (char c : small.input_alphabet.letters()) {
        u.push_back(c);
        walk(u);
        u.pop_back();
      }
    }
  } walker{f_sub, t, max_len};
  Word u;
  walker.walk(u);
  return !check_wtp(trim(f_sub)).holds;
}

}  // namespace mseq
