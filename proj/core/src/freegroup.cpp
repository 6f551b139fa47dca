#include "mseq/freegroup.hpp"

namespace mseq {

namespace {

void push_reduced(std::vector<SignedLetter>& out, SignedLetter sl) {
  if (!out.empty() && out.back().letter == sl.letter &&
      out.back().inverted != sl.inverted) {
    out.pop_back();
  } else {
    out.push_back(sl);
  }
}

}  // namespace

GroupWord GroupWord::reduce(const std::vector<SignedLetter>& raw) {
  GroupWord result;
  result.letters_.reserve(raw.size());
  for (SignedLetter sl : raw) push_reduced(result.letters_, sl);
  return result;
}

GroupWord GroupWord::embed(const Word& w) {
  GroupWord result;
  result.letters_.reserve(w.size());
  for (char c : w) result.letters_.push_back({c, false});
  return result;
}

GroupWord GroupWord::concat(const GroupWord& other) const {
  GroupWord result;
  result.letters_ = letters_;
  result.letters_.reserve(letters_.size() + other.letters_.size());
  for (SignedLetter sl : other.letters_) push_reduced(result.letters_, sl);
  return result;
}

GroupWord GroupWord::inverse() const {
  GroupWord result;
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    result.letters_.push_back({it->letter, !it->inverted});
  }
  return result;
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "-";
  std::string out;
  for (SignedLetter sl : letters_) {
    out.push_back(sl.letter);
    if (sl.inverted) out += "^-1";
  }
  return out;
}

GroupWord delay(const Word& v, const Word& w) {
  // Skip the common prefix directly; the rest cannot cancel further.
  std::size_t p = 0;
  while (p < v.size() && p < w.size() && v[p] == w[p]) ++p;
  GroupWord result;
  std::vector<SignedLetter> letters;
  letters.reserve(v.size() - p + w.size() - p);
  for (std::size_t i = v.size(); i > p; --i) letters.push_back({v[i - 1], true});
  for (std::size_t i = p; i < w.size(); ++i) letters.push_back({w[i], false});
  return GroupWord::reduce(letters);
}

}  // namespace mseq
