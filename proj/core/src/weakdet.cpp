#include "mseq/weakdet.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

#include "mseq/core.hpp"
#include "mseq/freegroup.hpp"

namespace mseq {

Rank rank(const Transducer& t, const SccIndex& index, const SubsetState& u) {
  std::vector<bool> seen(t.num_states(), false);
  std::deque<State> queue;
  for (const auto& [q, w] : u.pairs) {
    if (!seen[q]) {
      seen[q] = true;
      queue.push_back(q);
    }
  }
  auto adj = adjacency(t);
  Rank r;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    r.insert(index.scc_of[q]);
    for (std::size_t ei : adj[q]) {
      State d = t.edges[ei].dst;
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
    }
  }
  return r;
}

std::vector<std::pair<Word, SubsetState>> weakdet_step(const Transducer& t,
                                                       const SccIndex& index,
                                                       const SubsetState& u,
                                                       char sigma) {
  auto step = det_step(t, u, sigma);
  if (!step) return {};
  auto& [output, succ] = *step;
  if (rank(t, index, succ) == rank(t, index, u)) {
    return {{output, succ}};
  }
  std::vector<std::pair<Word, SubsetState>> resets;
  for (const auto& [q, w] : succ.pairs) {
    SubsetState target;
    target.pairs.push_back({q, Word{}});
    resets.push_back({output + w, std::move(target)});
  }
  return resets;
}

namespace {

// Divergence measure. After prefix stripping the longest residual w is
// within a factor two of the largest pairwise delay: some residual in
// the subset starts with a different letter than w (or is empty), and
// the delay of that pair is at least |w|.
std::size_t max_residual_len(const SubsetState& u) {
  std::size_t m = 0;
  for (const auto& [q, w] : u.pairs) m = std::max(m, w.size());
  return m;
}

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

}  // namespace

WeakDetResult weak_determinize(const Transducer& t, DetBounds bounds) {
  const std::size_t n = t.num_states();
  std::size_t delay_cutoff = bounds.max_residual_len;
  if (delay_cutoff == 0) {
    delay_cutoff = std::max<std::size_t>(1, 2 * max_output_len(t) * n * n * n);
  }

  WeakDetResult result;
  result.machine.name = t.name + ".wdet";
  result.machine.input_alphabet = t.input_alphabet;
  result.machine.output_alphabet = t.output_alphabet;

  SubsetState u0 = initial_subset(t);
  if (u0.empty()) return result;
  SccIndex index = scc(t);

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

  // Best-first by residual delay: the reachable closure (and with it the
  // exhaustion answer) does not depend on the order, but diverging
  // machines reach the delay cutoff long before the frontier of
  // below-cutoff subsets is exhausted.
  std::priority_queue<std::pair<std::size_t, State>> queue;
  result.machine.initials.push_back(intern(u0));
  queue.push({0, 0});

  while (!queue.empty() && result.exhausted) {
    State uid = queue.top().second;
    queue.pop();
    SubsetState u = result.subset_of[uid];
    for (char sigma : t.input_alphabet.letters()) {
      for (auto& [output, succ] : weakdet_step(t, index, u, sigma)) {
        std::size_t d = max_residual_len(succ);
        result.max_residual_seen = std::max(result.max_residual_seen, d);
        if (d >= delay_cutoff || succ.pairs.size() > bounds.max_subset_pairs) {
          result.exhausted = false;
          result.violation_hint = succ;
          break;
        }
        bool known = ids.contains(succ);
        if (!known && ids.size() >= bounds.max_states) {
          result.exhausted = false;
          result.violation_hint = succ;
          break;
        }
        State vid = intern(succ);
        result.machine.edges.push_back({uid, sigma, output, vid});
        if (!known) queue.push({d, vid});
      }
      if (!result.exhausted) break;
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
