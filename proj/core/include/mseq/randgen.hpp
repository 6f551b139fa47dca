#ifndef MSEQ_RANDGEN_HPP
#define MSEQ_RANDGEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mseq/types.hpp"

namespace mseq {

struct RandGenParams {
  std::size_t max_states = 5;
  std::string input_letters = "ab";
  std::string output_letters = "ab";
  std::size_t max_output_len = 2;
  double edge_density = 0.35;  // probability per (src, letter, dst) slot
  double final_prob = 0.4;
  double multi_final_prob = 0.0;  // extra final output word
};

/// One random transducer, trimmed and non-empty. Deterministic given the
/// generator state.
Transducer random_trim_transducer(std::mt19937_64& rng,
                                  const RandGenParams& params = {});

/// Seeded corpus; element i only depends on (seed, params, i).
std::vector<Transducer> random_corpus(std::uint64_t seed, std::size_t count,
                                      const RandGenParams& params = {});

}  // namespace mseq

#endif
