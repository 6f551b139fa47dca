#ifndef MSEQ_WEAKDET_HPP
#define MSEQ_WEAKDET_HPP

#include <optional>
#include <set>
#include <vector>

#include "mseq/determinize.hpp"
#include "mseq/graph.hpp"
#include "mseq/types.hpp"

namespace mseq {

/// Set of component ids of the source transducer reachable from the
/// states of a subset state.
using Rank = std::set<std::uint32_t>;

Rank rank(const Transducer& t, const SccIndex& index, const SubsetState& u);

/// One weak-determinisation step: the plain subset step when the rank is
/// preserved; when the rank strictly drops, one reset edge per pair of
/// the successor, targeting the singleton {(q, eps)}.
std::vector<std::pair<Word, SubsetState>> weakdet_step(const Transducer& t,
                                                       const SccIndex& index,
                                                       const SubsetState& u,
                                                       char sigma);

struct WeakDetResult {
  Transducer machine;                  // may be multi-valued at finals
  std::vector<SubsetState> subset_of;  // machine state -> subset
  bool exhausted = true;
  std::size_t max_residual_seen = 0;
  /// Subset whose residual length reached the cutoff, when the
  /// exploration was stopped.
  std::optional<SubsetState> violation_hint;
};

/// Closure of weakdet_step from I x {eps}, trimmed. Stops with
/// exhausted = false once some residual word in a subset reaches
/// max(1, 2 * M * |Q|^3) letters or a state bound is hit. Residuals are
/// prefix-stripped, so the longest one is within a factor two of the
/// largest pairwise residual delay of the subset.
WeakDetResult weak_determinize(const Transducer& t, DetBounds bounds = {});

}  // namespace mseq

#endif
