#ifndef MSEQ_FORMAT_HPP
#define MSEQ_FORMAT_HPP

#include <string>
#include <vector>

#include "mseq/types.hpp"

namespace mseq {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}

  std::size_t line;
};

/// Line-oriented text format:
///   fst <name>
///   in <letters>
///   out <letters>
///   state <id> [init] [final <w1> [<w2> ...]]
///   edge <src> <letter> <word|-> <dst>
/// `-` denotes the empty output word, lines whose first token starts
/// with `#` are comments, and `---` separates documents. Edges with a
/// `-` input are rejected: inputs are single letters.
Transducer parse(const std::string& text);
std::vector<Transducer> parse_multi(const std::string& text);

/// Canonical form: states in id order, edges sorted. parse(serialize(t))
/// is isomorphic to t.
std::string serialize(const Transducer& t);
std::string serialize_multi(const std::vector<Transducer>& ts);

}  // namespace mseq

#endif
