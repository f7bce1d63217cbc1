#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "dnacodec/nfa.hpp"
#include "dnacodec/trajectory.hpp"
#include "dnacodec/transducer.hpp"

namespace dnacodec {

// S: theta(L) and T(L) are disjoint.
// W: theta(v) not in T(u) for distinct u, v in L.
enum class PropertyKind { S, W };

// What is asserted about theta(w) versus T(w) for nonempty w.
enum class TransducerClass { unrestricted, theta_input_altering, theta_input_preserving };

struct PropertyDescriptor {
  Transducer transducer;
  Permutation theta;
  PropertyKind kind = PropertyKind::S;
  TransducerClass asserted_class = TransducerClass::unrestricted;
  std::string name;

  const Alphabet& alphabet() const { return transducer.alphabet(); }
};

enum class Decider { satisfies_s, w_preserving, w_general, maximality };

const char* to_string(PropertyKind k);
const char* to_string(TransducerClass c);
const char* to_string(Decider d);

struct Verdict {
  bool satisfied = false;
  // Violation (u, v): u, v in L, u != v for W, theta(v) in T(u).
  std::optional<WordPair> witness;
  // For maximality: a word outside L that can be added.
  std::optional<Word> extension;
  Decider decider = Decider::satisfies_s;
  std::map<std::string, std::size_t> stats;
};

struct DeciderOptions {
  std::size_t state_cap = default_state_cap();
  std::size_t triple_cap = 1000000;
  std::size_t atom_cap = 4096;
  // Length bound for the sanity check on an asserted class.
  std::size_t assertion_bound = 6;
  // W_general first looks for a violation among pairs with |x| + |y| up to
  // this total before building pumping triples; 0 skips the search.
  std::size_t refute_total = 8;
  Execution execution = Execution::parallel;
};

Verdict satisfies_s(const PropertyDescriptor& p, const Nfa& l, const DeciderOptions& opt = {});
Verdict satisfies_w_preserving(const PropertyDescriptor& p, const Nfa& l, const DeciderOptions& opt = {});
Verdict satisfies_w_general(const PropertyDescriptor& p, const Nfa& l, const DeciderOptions& opt = {});
// Dispatches on kind and class.
Verdict satisfies(const PropertyDescriptor& p, const Nfa& l, const DeciderOptions& opt = {});

// satisfied == maximal; extension is the shortlex-least word that can be added.
Verdict is_maximal(const PropertyDescriptor& p, const Nfa& l, const DeciderOptions& opt = {});
// A word of length <= max_len whose addition keeps the property, if any.
std::optional<Word> find_extension(const PropertyDescriptor& p, const Nfa& l, std::size_t max_len,
                                   const DeciderOptions& opt = {});

// Checks that a reported violation is real.
bool is_violation(const PropertyDescriptor& p, const Nfa& l, const WordPair& uv);

// Bond-free property of a trajectory pair as an S-kind descriptor.
PropertyDescriptor compile_trajectory_property(const TrajectoryPair& p, const Permutation& theta);

// The candidate triples (x1, x2, x3) used by the W decider for a
// normal-form relation, deduplicated by language. Exposed for testing.
struct Triple {
  Word x1, x2, x3;
};
std::vector<Triple> pumping_triples(const Transducer& s, std::size_t cap);

}  // namespace dnacodec
