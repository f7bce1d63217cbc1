#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dnacodec/alphabet.hpp"

namespace dnacodec {

using State = std::uint32_t;

// Nondeterministic automaton with epsilon moves (label kEpsilon).
class Nfa {
 public:
  struct Edge {
    Symbol label;
    State target;
    bool operator==(const Edge&) const = default;
  };

  explicit Nfa(Alphabet alphabet);

  static Nfa empty(Alphabet alphabet);
  static Nfa epsilon(Alphabet alphabet);
  static Nfa universal(Alphabet alphabet);  // A*
  static Nfa nonempty(Alphabet alphabet);   // A+
  static Nfa word(Alphabet alphabet, std::string_view w);
  static Nfa words(Alphabet alphabet, std::span<const Word> ws);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return out_.size(); }
  std::size_t num_edges() const;

  State add_state();
  State add_states(std::size_t n);  // returns the first new state
  void add_edge(State from, Symbol label, State to);
  void add_edge(State from, char label, State to) { add_edge(from, alphabet_.index_of(label), to); }
  void set_initial(State s, bool v = true) { initial_[s] = v; }
  void set_final(State s, bool v = true) { final_[s] = v; }

  bool is_initial(State s) const { return initial_[s]; }
  bool is_final(State s) const { return final_[s]; }
  std::vector<State> initial_states() const;
  std::vector<State> final_states() const;
  std::span<const Edge> edges(State s) const { return out_[s]; }
  bool has_epsilon() const;

  // Sort and dedupe every edge list.
  void canonicalize();

  bool accepts(std::string_view w) const;

  // Same language over a larger alphabet.
  Nfa rebased(const Alphabet& superset) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<Edge>> out_;
  std::vector<char> initial_;
  std::vector<char> final_;
};

// State cap used by subset constructions. Read from DNACODEC_STATE_CAP,
// defaulting to 2^20.
std::size_t default_state_cap();

std::vector<State> epsilon_closure(const Nfa& a, std::vector<State> states);

Nfa remove_epsilon(const Nfa& a);
Nfa trim(const Nfa& a);
Nfa reverse(const Nfa& a);
Nfa intersect(const Nfa& a, const Nfa& b);
Nfa unite(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
Nfa star(const Nfa& a);
Nfa plus(const Nfa& a);
Nfa relabel(const Nfa& a, const Permutation& p);  // letterwise, ignores p's extension

// Complete deterministic automaton. Throws ResourceError past cap.
Nfa determinize(const Nfa& a, std::size_t cap = default_state_cap());
Nfa complement(const Nfa& a, std::size_t cap = default_state_cap());

// Shortlex-least accepted word, or nullopt when the language is empty.
std::optional<Word> shortest_word(const Nfa& a);
bool is_empty(const Nfa& a);

// Shortlex-least rejected word, or nullopt when a accepts A*.
std::optional<Word> missing_word(const Nfa& a, std::size_t cap = default_state_cap());
bool is_universal(const Nfa& a, std::size_t cap = default_state_cap());

// Image of the language under a morphic or antimorphic permutation.
Nfa theta_image(const Nfa& a, const Permutation& theta);

// All accepted words of length at most max_len, shortlex. Throws
// ResourceError when more than `limit` words would be produced.
std::vector<Word> enumerate(const Nfa& a, std::size_t max_len, std::size_t limit = SIZE_MAX);

// Shortlex-least word in exactly one of the two languages.
std::optional<Word> difference_witness(const Nfa& a, const Nfa& b, std::size_t cap = default_state_cap());
bool equivalent(const Nfa& a, const Nfa& b, std::size_t cap = default_state_cap());

}  // namespace dnacodec
