#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dnacodec/search.hpp"
#include "dnacodec/transducer.hpp"

namespace dnacodec {

// Pairs (alpha_i, beta_i) of nonempty words over an alphabet.
struct PcpInstance {
  Alphabet alphabet;
  std::vector<Word> alpha;
  std::vector<Word> beta;

  PcpInstance(Alphabet al, std::vector<Word> a, std::vector<Word> b);
  std::size_t size() const { return alpha.size(); }
};

// Solved when alpha_{i1}...alpha_{in} == theta(beta_{i1}...beta_{in}).
struct ThetaPcpInstance {
  PcpInstance pairs;
  Permutation theta;
};

using Sequence = std::vector<std::size_t>;

struct SolutionCheck {
  bool solved = false;
  Word top;
  Word bottom;  // already mapped by theta for the theta variant
};

SolutionCheck check_solution(const PcpInstance& p, std::span<const std::size_t> seq);
SolutionCheck check_solution(const ThetaPcpInstance& p, std::span<const std::size_t> seq);

// Shortest solution with at most max_len indices, ties broken
// lexicographically on the index sequence.
std::optional<Sequence> solve_bounded(const PcpInstance& p, std::size_t max_len);
std::optional<Sequence> solve_bounded(const ThetaPcpInstance& p, std::size_t max_len,
                                      Execution ex = Execution::parallel);

// Binary PCP to theta-PCP over theta's alphabet (which must contain 0 and 1).
// Pairs l and l+1 are the two gadget pairs.
ThetaPcpInstance reduce_to_theta_pcp(const PcpInstance& p, const Permutation& theta);
// Image of a PCP solution under the reduction.
Sequence map_solution(const PcpInstance& p, std::span<const std::size_t> seq);

// Block code h used by the preserving reduction: symbols of the PCP
// alphabet first, then the indices 0..l-1, written in binary (big-endian)
// with a fixed width.
struct BlockCode {
  std::size_t width = 1;
  std::size_t sigma = 0;    // size of the PCP alphabet
  std::size_t indices = 0;  // l
  Word symbol(std::size_t gamma) const;
  Word encode_letter(const Alphabet& al, char c) const;
  Word encode_index(std::size_t i) const;
};

struct PreservingReduction {
  Transducer transducer;
  BlockCode code;
};

// T with theta(w) not in T(w) exactly when w = h(u v), u over the PCP
// alphabet, v over the indices, and reading v backwards gives a solution
// that spells u.
PreservingReduction pcp_to_preserving_transducer(const PcpInstance& p, const Permutation& theta);

// One state, loops (alpha_i, theta^2(beta_i)). theta(w) in T(w) for some
// nonempty w exactly when the theta-PCP instance has a solution.
Transducer theta_pcp_to_altering_transducer(const ThetaPcpInstance& p);

}  // namespace dnacodec
