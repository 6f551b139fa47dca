#include "mseq/randgen.hpp"

#include <algorithm>

#include "mseq/core.hpp"

namespace mseq {

namespace {

Transducer random_candidate(std::mt19937_64& rng, const RandGenParams& p) {
  std::uniform_int_distribution<std::size_t> state_count(1, p.max_states);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  Transducer t;
  t.name = "random";
  t.input_alphabet = Alphabet(p.input_letters);
  t.output_alphabet = Alphabet(p.output_letters);
  std::size_t n = state_count(rng);
  for (std::size_t q = 0; q < n; ++q) t.add_state();

  std::uniform_int_distribution<std::size_t> out_len(0, p.max_output_len);
  std::uniform_int_distribution<std::size_t> out_letter(0, p.output_letters.size() - 1);
  auto random_word = [&] {
    Word w;
    std::size_t len = out_len(rng);
    for (std::size_t i = 0; i < len; ++i) w.push_back(p.output_letters[out_letter(rng)]);
    return w;
  };

  for (State src = 0; src < n; ++src) {
    for (char c : t.input_alphabet.letters()) {
      for (State dst = 0; dst < n; ++dst) {
        if (coin(rng) < p.edge_density) t.edges.push_back({src, c, random_word(), dst});
      }
    }
  }
  std::uniform_int_distribution<std::size_t> pick_state(0, n - 1);
  t.initials.push_back(static_cast<State>(pick_state(rng)));
  for (State q = 0; q < n; ++q) {
    if (coin(rng) < p.final_prob) {
      std::vector<Word> outputs{random_word()};
      if (coin(rng) < p.multi_final_prob) outputs.push_back(random_word());
      std::sort(outputs.begin(), outputs.end());
      outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
      t.finals[q] = std::move(outputs);
    }
  }
  return t;
}

}  // namespace

Transducer random_trim_transducer(std::mt19937_64& rng, const RandGenParams& p) {
  for (;;) {
    Transducer t = trim(random_candidate(rng, p));
    if (t.num_states() > 0) return t;
  }
}

std::vector<Transducer> random_corpus(std::uint64_t seed, std::size_t count,
                                      const RandGenParams& p) {
  std::vector<Transducer> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (i + 1));
    Transducer t = random_trim_transducer(rng, p);
    t.name = "random" + std::to_string(i);
    corpus.push_back(std::move(t));
  }
  return corpus;
}

}  // namespace mseq
