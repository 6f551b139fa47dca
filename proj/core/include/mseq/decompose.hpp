#ifndef MSEQ_DECOMPOSE_HPP
#define MSEQ_DECOMPOSE_HPP

#include <optional>
#include <set>
#include <vector>

#include "mseq/determinize.hpp"
#include "mseq/twinning.hpp"
#include "mseq/types.hpp"

namespace mseq {

/// Thrown by decompose when the input fails the weak twinning property.
class WtpViolationError : public std::runtime_error {
public:
  WtpViolationError(std::string message, WtpWitness witness)
      : std::runtime_error(std::move(message)), witness(std::move(witness)) {}

  WtpWitness witness;
};

struct PartProvenance {
  State initial = 0;          // initial state of the source transducer
  std::size_t path_index = 0;  // condensation path within its weak det
  std::size_t choice_index = 0;
};

struct Decomposition {
  std::vector<Transducer> parts;  // each sequential
  std::vector<PartProvenance> provenance;  // parallel to parts
};

struct DecomposeBounds {
  DetBounds det;
  std::size_t max_copies = 10000;
};

/// Full pipeline: per initial state, weak determinisation, split along
/// condensation paths, choice-function expansion, trim, and
/// deduplication of isomorphic parts. Throws WtpViolationError when the
/// weak twinning property fails and BoundExceededError if a bound is hit
/// despite it holding (which signals a bug).
Decomposition decompose(const Transducer& t, DecomposeBounds bounds = {});

std::set<Word> evaluate(const Decomposition& d, const Word& u);

struct EquivResult {
  bool equivalent = true;
  std::optional<Word> counterexample;  // lexicographically least
};

/// Compares evaluate on every input word of length <= max_len.
EquivResult equiv_bounded(const Transducer& a, const Transducer& b,
                          std::size_t max_len);
EquivResult equiv_bounded(const Decomposition& a, const Transducer& b,
                          std::size_t max_len);

/// Certifies t non-multi-sequential from a sub-relation f_sub that fails
/// the weak twinning property. Inclusion of f_sub in t is checked at
/// bounded length and a failure throws ValidationError.
bool non_multiseq_certificate(const Transducer& t, const Transducer& f_sub,
                              std::size_t max_len = 7);

}  // namespace mseq

#endif
