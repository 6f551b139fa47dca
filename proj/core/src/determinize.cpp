#include "mseq/determinize.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mseq/core.hpp"

namespace mseq {

void SubsetState::canonicalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::string subset_label(const Transducer& t, const SubsetState& u) {
  std::string out = "{";
  bool first = true;
  for (const auto& [q, w] : u.pairs) {
    if (!first) out += ",";
    first = false;
    out += "(" + t.labels[q] + "," + (w.empty() ? "-" : w) + ")";
  }
  return out + "}";
}

SubsetState initial_subset(const Transducer& t) {
  SubsetState u;
  for (State q : t.initials) u.pairs.push_back({q, Word{}});
  u.canonicalize();
  return u;
}

std::optional<std::pair<Word, SubsetState>> det_step(const Transducer& t,
                                                     const SubsetState& u,
                                                     char sigma) {
  SubsetState r;
  for (const auto& [p, residual] : u.pairs) {
    for (const Edge& e : t.edges) {
      if (e.src == p && e.input == sigma) {
        r.pairs.push_back({e.dst, residual + e.output});
      }
    }
  }
  if (r.pairs.empty()) return std::nullopt;
  r.canonicalize();

  Word prefix = r.pairs.front().second;
  for (const auto& [q, w] : r.pairs) {
    std::size_t k = 0;
    while (k < prefix.size() && k < w.size() && prefix[k] == w[k]) ++k;
    prefix.resize(k);
  }
  for (auto& [q, w] : r.pairs) w.erase(0, prefix.size());
  r.canonicalize();
  return std::make_pair(prefix, r);
}

std::size_t default_residual_bound(const Transducer& t) {
  std::size_t n = t.num_states();
  return 2 * max_output_len(t) * n * n * n + max_output_len(t);
}

namespace {

std::vector<Word> subset_final_outputs(const Transducer& t, const SubsetState& u) {
  std::vector<Word> outputs;
  for (const auto& [q, w] : u.pairs) {
    auto it = t.finals.find(q);
    if (it == t.finals.end()) continue;
    for (const Word& z : it->second) outputs.push_back(w + z);
  }
  std::sort(outputs.begin(), outputs.end());
  outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
  return outputs;
}

std::size_t max_residual(const SubsetState& u) {
  std::size_t m = 0;
  for (const auto& [q, w] : u.pairs) m = std::max(m, w.size());
  return m;
}

}  // namespace

DetExpansion determinize(const Transducer& t, DetBounds bounds) {
  if (bounds.max_residual_len == 0) {
    bounds.max_residual_len = default_residual_bound(t);
  }

  DetExpansion result;
  result.machine.name = t.name + ".det";
  result.machine.input_alphabet = t.input_alphabet;
  result.machine.output_alphabet = t.output_alphabet;

  SubsetState u0 = initial_subset(t);
  if (u0.empty()) return result;

  std::map<SubsetState, State> ids;
  auto intern = [&](const SubsetState& u) {
    auto [it, inserted] = ids.try_emplace(u, 0);
    if (inserted) {
      it->second = result.machine.add_state(subset_label(t, u));
      result.subset_of.push_back(u);
      auto outputs = subset_final_outputs(t, u);
      if (!outputs.empty()) result.machine.finals[it->second] = std::move(outputs);
    }
    return it->second;
  };

  std::deque<State> queue;
  result.machine.initials.push_back(intern(u0));
  queue.push_back(0);

  while (!queue.empty()) {
    State uid = queue.front();
    queue.pop_front();
    SubsetState u = result.subset_of[uid];
    for (char sigma : t.input_alphabet.letters()) {
      auto step = det_step(t, u, sigma);
      if (!step) continue;
      auto& [output, succ] = *step;
      if (max_residual(succ) > bounds.max_residual_len ||
          succ.pairs.size() > bounds.max_subset_pairs) {
        result.exhausted = false;
        continue;
      }
      bool known = ids.contains(succ);
      if (!known && ids.size() >= bounds.max_states) {
        result.exhausted = false;
        continue;
      }
      State vid = intern(succ);
      result.machine.edges.push_back({uid, sigma, output, vid});
      if (!known) queue.push_back(vid);
    }
  }

  if (result.exhausted) {
    std::vector<std::int64_t> old_to_new;
    Transducer trimmed = trim(result.machine, old_to_new);
    std::vector<SubsetState> subsets(trimmed.num_states());
    for (std::size_t q = 0; q < old_to_new.size(); ++q) {
      if (old_to_new[q] >= 0) {
        subsets[static_cast<std::size_t>(old_to_new[q])] = result.subset_of[q];
      }
    }
    result.machine = std::move(trimmed);
    result.subset_of = std::move(subsets);
  }
  return result;
}

}  // namespace mseq
