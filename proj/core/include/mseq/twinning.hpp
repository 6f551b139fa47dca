#ifndef MSEQ_TWINNING_HPP
#define MSEQ_TWINNING_HPP

#include <optional>
#include <string>

#include "mseq/types.hpp"

namespace mseq {

/// Violation pattern of the weak twinning property: runs
/// q1 -u|u1-> q1, q1 -v|v1-> q1, q1 -u|u2-> q2, q2 -v|v2-> q2
/// with delay(u1,u2) != delay(u1 v1, u2 v2).
struct WtpWitness {
  State q1 = 0;
  State q2 = 0;
  Word u, v;
  Word u1, u2, v1, v2;
};

/// Violation pattern of the twinning property: runs
/// i1 -u|u1-> q1 -v|v1-> q1 and i2 -u|u2-> q2 -v|v2-> q2 from initial
/// states i1, i2 with delay(u1,u2) != delay(u1 v1, u2 v2).
struct TpWitness {
  State i1 = 0;
  State i2 = 0;
  State q1 = 0;
  State q2 = 0;
  Word u, v;
  Word u1, u2, v1, v2;
};

struct WtpResult {
  bool holds = true;
  std::optional<WtpWitness> witness;
};

struct TpResult {
  bool holds = true;
  std::optional<TpWitness> witness;
};

/// Decides the twinning property on a trim transducer via the square
/// automaton: unbalanced-output cycles and mismatched access pairs
/// reachable from pairs of initial states.
TpResult check_tp(const Transducer& t);

/// Decides the weak twinning property on a trim transducer. Returned
/// witnesses are normalised and replay-verified.
WtpResult check_wtp(const Transducer& t);

/// Oracle: enumerates the pattern of the definition directly for all
/// 1 <= |u|,|v| <= max_pattern_len, with delays deduplicated per square
/// state.
WtpResult check_wtp_bruteforce(const Transducer& t, std::size_t max_pattern_len);

/// True iff the four runs exist and the delay inequality holds.
bool replay_wtp(const Transducer& t, const WtpWitness& w);
bool replay_tp(const Transducer& t, const TpWitness& w);

/// Pumps the access so that glen(delay(u1 v1^n, u2 v2^n)) >= n holds for
/// every n. Replays of the input witness remain valid.
WtpWitness normalize_witness(const WtpWitness& w);

/// glen(delay(u1 v1^n, u2 v2^n)).
std::size_t pump_witness(const WtpWitness& w, std::size_t n);

std::string describe(const Transducer& t, const WtpWitness& w);
std::string describe(const Transducer& t, const TpWitness& w);

}  // namespace mseq

#endif
