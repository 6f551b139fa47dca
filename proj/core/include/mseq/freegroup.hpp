#ifndef MSEQ_FREEGROUP_HPP
#define MSEQ_FREEGROUP_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mseq/types.hpp"

namespace mseq {

struct SignedLetter {
  char letter = 0;
  bool inverted = false;

  auto operator<=>(const SignedLetter&) const = default;
};

/// Reduced word over an alphabet and its formal inverses. The empty word
/// is the group identity.
class GroupWord {
public:
  GroupWord() = default;

  static GroupWord reduce(const std::vector<SignedLetter>& raw);
  /// Embeds a plain word with all-positive signs.
  static GroupWord embed(const Word& w);

  GroupWord concat(const GroupWord& other) const;
  GroupWord inverse() const;
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<SignedLetter>& letters() const { return letters_; }

  /// Display form: positive letters as-is, inverted ones with `^-1`.
  std::string str() const;

  bool operator==(const GroupWord&) const = default;
  auto operator<=>(const GroupWord&) const = default;

private:
  std::vector<SignedLetter> letters_;  // reduced
};

/// Delay between two plain words: reduce(v^-1 w).
GroupWord delay(const Word& v, const Word& w);

inline std::size_t glen(const GroupWord& x) { return x.length(); }

}  // namespace mseq

#endif
