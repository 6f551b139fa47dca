#ifndef MSEQ_ISOMORPHISM_HPP
#define MSEQ_ISOMORPHISM_HPP

#include "mseq/types.hpp"

namespace mseq {

/// True iff some state bijection maps a onto b preserving alphabets,
/// edges, initials, finals, and final outputs. Labels are ignored.
/// Backtracking search; intended for small machines.
bool isomorphic(const Transducer& a, const Transducer& b);

}  // namespace mseq

#endif
