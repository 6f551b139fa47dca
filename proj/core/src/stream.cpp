#include "mseq/stream.hpp"

#include <stdexcept>

#include "mseq/core.hpp"

namespace mseq {

std::vector<bool> advisory_bits(const Decomposition& parts, const Word& u) {
  std::vector<bool> bits;
  bits.reserve(parts.parts.size());
  for (const Transducer& part : parts.parts) bits.push_back(accepts(part, u));
  return bits;
}

StreamSession::StreamSession(const Decomposition& parts, std::vector<bool> advisory)
    : parts_(parts), advisory_(std::move(advisory)) {
  if (advisory_.size() != parts_.parts.size()) {
    throw std::invalid_argument("advisory length does not match part count");
  }
  for (std::size_t i = 0; i < advisory_.size(); ++i) {
    if (!advisory_[i]) continue;
    enabled_.push_back(i);
    const Transducer& part = parts_.parts[i];
    states_.push_back(part.initials.empty() ? std::nullopt
                                            : std::optional<State>(part.initials[0]));
    channels_.emplace_back();
    write_pos_.push_back(0);
  }
}

void StreamSession::push(char sigma) {
  for (std::size_t k = 0; k < enabled_.size(); ++k) {
    const Transducer& part = parts_.parts[enabled_[k]];
    if (!states_[k]) {
      throw DeadPartError("enabled part has no run (advisory inconsistent)");
    }
    const Edge* step = nullptr;
    for (const Edge& e : part.edges) {
      if (e.src == *states_[k] && e.input == sigma) {
        step = &e;
        break;
      }
    }
    if (!step) {
      throw DeadPartError("enabled part has no transition on input letter");
    }
    states_[k] = step->dst;
    channels_[k].append(step->output);
    write_pos_[k] += step->output.size();  // cursor only ever moves right
  }
}

std::set<Word> StreamSession::close() {
  std::set<Word> out;
  for (std::size_t k = 0; k < enabled_.size(); ++k) {
    const Transducer& part = parts_.parts[enabled_[k]];
    if (!states_[k] || !part.is_final(*states_[k])) {
      throw NotFinalError("enabled part ended in a non-final state");
    }
    const Word& z = part.finals.at(*states_[k]).front();
    channels_[k].append(z);
    write_pos_[k] += z.size();
    out.insert(channels_[k]);
  }
  return out;
}

}  // namespace mseq
