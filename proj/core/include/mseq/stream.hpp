#ifndef MSEQ_STREAM_HPP
#define MSEQ_STREAM_HPP

#include <optional>
#include <set>
#include <vector>

#include "mseq/decompose.hpp"
#include "mseq/types.hpp"

namespace mseq {

class DeadPartError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotFinalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Domain-membership bits: bit i is set iff the input automaton of part
/// i accepts u. This is the separate preprocessing pass over the input.
std::vector<bool> advisory_bits(const Decomposition& parts, const Word& u);

/// Streaming evaluator over a decomposition: one append-only output
/// channel per enabled part, and per-part current states as the only
/// mutable non-channel memory.
class StreamSession {
public:
  StreamSession(const Decomposition& parts, std::vector<bool> advisory);

  /// Advances every enabled part by one input letter, appending the edge
  /// output to its channel. Throws DeadPartError when an enabled part
  /// has no transition (the advisory was inconsistent with the input).
  void push(char sigma);

  /// Appends final outputs and returns the set of channel contents.
  /// Throws NotFinalError when an enabled part ends non-final.
  std::set<Word> close();

  /// Mutable non-channel cells (state registers of enabled parts); fixed
  /// at open time, asserted never to grow.
  std::size_t working_cells() const { return states_.size(); }

  const std::vector<Word>& channels() const { return channels_; }

private:
  const Decomposition& parts_;
  std::vector<bool> advisory_;
  std::vector<std::size_t> enabled_;        // indices of enabled parts
  std::vector<std::optional<State>> states_;  // per enabled part
  std::vector<Word> channels_;               // per enabled part, append-only
  std::vector<std::size_t> write_pos_;       // monotone append cursors
};

}  // namespace mseq

#endif
