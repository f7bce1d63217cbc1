#pragma once

#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dnacodec/nfa.hpp"
#include "dnacodec/search.hpp"

namespace dnacodec {

struct WordPair {
  Word input;
  Word output;
  auto operator<=>(const WordPair&) const = default;
};

// Finite transducer whose edges carry a pair of words (input, output).
class Transducer {
 public:
  struct Edge {
    State source;
    State target;
    Word input;
    Word output;
  };

  explicit Transducer(Alphabet alphabet);

  static Transducer empty(Alphabet alphabet);
  static Transducer identity(Alphabet alphabet);
  // The recognizable relation L(a) x L(b).
  static Transducer product(const Nfa& a, const Nfa& b);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return initial_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  State add_state();
  State add_states(std::size_t n);
  void add_edge(State from, std::string_view input, std::string_view output, State to);
  void set_initial(State s, bool v = true) { initial_[s] = v; }
  void set_final(State s, bool v = true) { final_[s] = v; }
  bool is_initial(State s) const { return initial_[s]; }
  bool is_final(State s) const { return final_[s]; }
  std::vector<State> initial_states() const;
  std::vector<State> final_states() const;

  // Every edge reads exactly one input symbol or writes exactly one output symbol.
  bool is_normal() const;

  Transducer rebased(const Alphabet& superset) const;

 private:
  Alphabet alphabet_;
  std::vector<Edge> edges_;
  std::vector<char> initial_;
  std::vector<char> final_;
};

// Equivalent transducer in normal form, trimmed.
Transducer normalize(const Transducer& t);
Transducer trim(const Transducer& t);
Transducer inverse(const Transducer& t);
Transducer unite(const Transducer& a, const Transducer& b);
// compose(a, b) realizes a after b: (x, z) with (x, y) in b and (y, z) in a.
Transducer compose(const Transducer& a, const Transducer& b);
Transducer restrict_input(const Transducer& t, const Nfa& l);
Transducer restrict_output(const Transducer& t, const Nfa& l);
// Relabel outputs letterwise with p (extension ignored).
Transducer relabel_output(const Transducer& t, const Permutation& p);

Nfa domain(const Transducer& t);
Nfa range(const Transducer& t);
Nfa image(const Transducer& t, const Nfa& l);

// Realized pair of least total length, or nullopt when the relation is empty.
std::optional<WordPair> find_pair(const Transducer& t);
bool relation_empty(const Transducer& t);

// All realized pairs with |x| + |y| <= max_total.
std::set<WordPair> enumerate_pairs(const Transducer& t, std::size_t max_total);

// Membership test for (x, y), reusable across many queries.
class PairMatcher {
 public:
  explicit PairMatcher(const Transducer& t);
  bool operator()(std::string_view x, std::string_view y) const;

 private:
  struct Arc {
    Symbol in;
    Symbol out;
    State target;
  };
  Alphabet alphabet_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<State> initial_;
  std::vector<char> final_;
};

bool realizes(const Transducer& t, std::string_view x, std::string_view y);

// t(x) is a subset of {x} for every x.
std::optional<WordPair> partial_identity_counterexample(const Transducer& t);
bool is_partial_identity(const Transducer& t);

struct FunctionalityWitness {
  Word input;
  Word output1;
  Word output2;
};
std::optional<FunctionalityWitness> functionality_counterexample(const Transducer& t);
bool is_functional(const Transducer& t);

// A realized pair with |x| != |y|.
std::optional<WordPair> length_counterexample(const Transducer& t);
bool is_length_preserving(const Transducer& t);

// One component A x B of a recognizable relation.
struct RecognizablePart {
  Nfa input;
  Nfa output;
};

struct InclusionLimits {
  std::size_t state_cap = default_state_cap();
  std::size_t atom_cap = 4096;
};

// A realized pair outside the union of the parts, or nullopt when
// t is contained in it.
std::optional<WordPair> recognizable_inclusion_counterexample(const Transducer& t,
                                                              std::span<const RecognizablePart> parts,
                                                              const InclusionLimits& limits = {});

enum class ThetaMode { altering, preserving };

// Shortlex-first w in A+ with |w| <= max_len refuting the mode:
// altering is refuted when theta(w) is in t(w), preserving when it is not.
std::optional<Word> bounded_counterexample(const Transducer& t, const Permutation& theta, ThetaMode mode,
                                           std::size_t max_len, Execution ex = Execution::parallel);

}  // namespace dnacodec
