#ifndef MSEQ_CORE_HPP
#define MSEQ_CORE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mseq/types.hpp"

namespace mseq {

/// Throws ValidationError on the first violated structural invariant.
void validate(const Transducer& t);

/// Restriction to states that are accessible and co-accessible.
Transducer trim(const Transducer& t);
/// As trim, but also reports the renumbering (old id -> new id, or -1
/// when the state was dropped).
Transducer trim(const Transducer& t, std::vector<std::int64_t>& old_to_new);

/// All outputs of accepting runs on u.
std::set<Word> evaluate(const Transducer& t, const Word& u);

/// Disjoint union; requires matching alphabets.
Transducer union_of(const std::vector<Transducer>& ts);

/// Maximum length over edge outputs and final outputs.
std::size_t max_output_len(const Transducer& t);

/// True iff at most one initial state and no two distinct edges share
/// source and input letter.
bool is_sequential(const Transducer& t);

/// True iff u is the input of some accepting run.
bool accepts(const Transducer& t, const Word& u);

/// The example transducers used throughout the test suite, keyed by
/// name: t_a, t_blank, t_swap, t_swap_star, t_fig2, t1_appendix,
/// t2_appendix.
const std::map<std::string, Transducer>& fixtures();
const Transducer& fixture(const std::string& name);

/// Outgoing edge indices per (state, input letter); shared lookup helper.
std::vector<std::vector<std::size_t>> adjacency(const Transducer& t);

}  // namespace mseq

#endif
