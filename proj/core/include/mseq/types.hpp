#ifndef MSEQ_TYPES_HPP
#define MSEQ_TYPES_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mseq {

using State = std::uint32_t;
using Word = std::string;

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BoundExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ordered set of single-character symbols.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::string_view letters);

  bool contains(char c) const;
  bool contains_word(const Word& w) const;
  std::size_t size() const { return letters_.size(); }
  const std::string& letters() const { return letters_; }

  bool operator==(const Alphabet&) const = default;

private:
  std::string letters_;  // sorted, duplicate-free
};

struct Edge {
  State src = 0;
  char input = 0;
  Word output;
  State dst = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Finite transducer with letter inputs and word outputs. Final states
/// carry a finite non-empty set of final output words; plain (single
/// valued) transducers are the special case where every set is a
/// singleton.
struct Transducer {
  std::string name;
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  std::vector<std::string> labels;  // one display label per state
  std::vector<State> initials;      // sorted, duplicate-free
  std::map<State, std::vector<Word>> finals;  // state -> sorted output words
  std::vector<Edge> edges;

  std::size_t num_states() const { return labels.size(); }
  bool is_final(State q) const { return finals.contains(q); }
  bool is_initial(State q) const;
  bool single_valued() const;

  /// Appends a fresh state and returns its id.
  State add_state(std::string label = {});
};

/// Sequence of chained edges together with its source state.
struct Run {
  State source = 0;
  std::vector<Edge> edges;

  State target() const { return edges.empty() ? source : edges.back().dst; }
  Word input() const;
  Word output() const;
};

}  // namespace mseq

#endif
