#ifndef MSEQ_DETERMINIZE_HPP
#define MSEQ_DETERMINIZE_HPP

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "mseq/types.hpp"

namespace mseq {

/// Subset-construction state: finite set of (state, residual output word)
/// pairs, kept sorted so equality is structural.
struct SubsetState {
  std::vector<std::pair<State, Word>> pairs;

  void canonicalize();
  bool empty() const { return pairs.empty(); }

  auto operator<=>(const SubsetState&) const = default;
};

/// Display form using the source transducer's state labels, e.g.
/// "{(q1,a),(q2,b)}".
std::string subset_label(const Transducer& t, const SubsetState& u);

SubsetState initial_subset(const Transducer& t);

/// One subset step on letter sigma: successors with the longest common
/// prefix of their residuals stripped off and returned as the edge
/// output. nullopt when there is no successor.
std::optional<std::pair<Word, SubsetState>> det_step(const Transducer& t,
                                                     const SubsetState& u,
                                                     char sigma);

struct DetBounds {
  std::size_t max_states = 100000;
  /// 0 means: derive 2 * M * |Q|^3 + M from the transducer.
  std::size_t max_residual_len = 0;
  /// Resource cap on the size of a single subset. Diverging machines can
  /// accumulate pairs geometrically while every residual stays short, so
  /// the residual cutoff alone may be reached only after exhausting
  /// memory. Exceeding the cap stops the construction (exhausted =
  /// false), like the state cap.
  std::size_t max_subset_pairs = 100000;
};

std::size_t default_residual_bound(const Transducer& t);

struct DetExpansion {
  Transducer machine;                  // states are subset ids
  std::vector<SubsetState> subset_of;  // machine state -> subset
  bool exhausted = true;
};

/// Breadth-first closure of det_step from I x {eps}. May be cut short by
/// the bounds (exhausted = false); the explored part is still returned.
DetExpansion determinize(const Transducer& t, DetBounds bounds = {});

}  // namespace mseq

#endif
