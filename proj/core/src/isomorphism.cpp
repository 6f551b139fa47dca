#include "mseq/isomorphism.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace mseq {

namespace {

// Degree/role signature used to prune the bijection search.
struct Signature {
  bool initial = false;
  std::vector<Word> final_outputs;
  std::vector<std::tuple<char, Word, bool>> out;  // (input, output, dst==src)
  std::vector<std::tuple<char, Word, bool>> in;

  auto operator<=>(const Signature&) const = default;
};

Signature signature(const Transducer& t, State q) {
  Signature s;
  s.initial = t.is_initial(q);
  if (auto it = t.finals.find(q); it != t.finals.end()) s.final_outputs = it->second;
  for (const Edge& e : t.edges) {
    if (e.src == q) s.out.push_back({e.input, e.output, e.dst == e.src});
    if (e.dst == q) s.in.push_back({e.input, e.output, e.dst == e.src});
  }
  std::sort(s.out.begin(), s.out.end());
  std::sort(s.in.begin(), s.in.end());
  return s;
}

bool edges_match(const Transducer& a, const Transducer& b,
                 const std::vector<std::int64_t>& map) {
  std::multiset<Edge> ea, eb;
  for (const Edge& e : a.edges) {
    ea.insert({static_cast<State>(map[e.src]), e.input, e.output,
               static_cast<State>(map[e.dst])});
  }
  eb.insert(b.edges.begin(), b.edges.end());
  return ea == eb;
}

bool extend(const Transducer& a, const Transducer& b,
            const std::vector<Signature>& sig_a, const std::vector<Signature>& sig_b,
            std::vector<std::int64_t>& map, std::vector<bool>& used, State q) {
  if (q == a.num_states()) return edges_match(a, b, map);
  for (State r = 0; r < b.num_states(); ++r) {
    if (used[r] || sig_a[q] != sig_b[r]) continue;
    map[q] = r;
    used[r] = true;
    if (extend(a, b, sig_a, sig_b, map, used, q + 1)) return true;
    used[r] = false;
    map[q] = -1;
  }
  return false;
}

}  // namespace

bool isomorphic(const Transducer& a, const Transducer& b) {
  if (a.num_states() != b.num_states() || a.edges.size() != b.edges.size() ||
      a.initials.size() != b.initials.size() || a.finals.size() != b.finals.size() ||
      a.input_alphabet != b.input_alphabet || a.output_alphabet != b.output_alphabet) {
    return false;
  }
  std::vector<Signature> sig_a, sig_b;
  for (State q = 0; q < a.num_states(); ++q) sig_a.push_back(signature(a, q));
  for (State q = 0; q < b.num_states(); ++q) sig_b.push_back(signature(b, q));
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<std::int64_t> map(a.num_states(), -1);
  std::vector<bool> used(b.num_states(), false);
  return extend(a, b, sig_a, sig_b, map, used, 0);
}

}  // namespace mseq
