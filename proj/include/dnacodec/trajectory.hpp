#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dnacodec/nfa.hpp"
#include "dnacodec/transducer.hpp"

namespace dnacodec {

// Word operations on a single trajectory t over {0,1}: 0 takes the next
// symbol of the first word, 1 the next symbol of the second.
std::optional<Word> shuffle_on_trajectory(std::string_view x, std::string_view t, std::string_view w);
// The y with x == shuffle_on_trajectory(y, t, w), if any.
std::optional<Word> delete_on_trajectory(std::string_view x, std::string_view t, std::string_view w);

// A pair of trajectory regexes over {0,1}.
struct TrajectoryPair {
  std::string e1;
  std::string e2;
  bool strict = true;
};

// Shuffle of each word with arbitrary words along e (star) or along e
// with at least one inserted symbol (plus), and the matching deletions.
enum class TrajectoryOp { delete_star, shuffle_star, delete_plus, shuffle_plus };

Nfa parse_trajectory(std::string_view regex);  // over the alphabet "01"

Transducer trajectory_transducer(TrajectoryOp op, std::string_view regex, const Alphabet& alphabet);

// The languages (X shuffle_e A*) or (X shuffle_e A+) and the deletions
// (X delete_e A*) or (X delete_e A+), built directly on automata.
Nfa shuffle_language(const Nfa& x, std::string_view regex, bool plus);
Nfa delete_language(const Nfa& x, std::string_view regex, bool plus);

// Words that must avoid theta(L) for L to be bond-free with respect to p:
// Phi_s(L) for strict pairs, Phi(L) otherwise.
Nfa bond_free_operator(const TrajectoryPair& p, const Nfa& l);

}  // namespace dnacodec
