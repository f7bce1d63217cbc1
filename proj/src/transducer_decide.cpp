// Decision procedures on transducers: identity, functionality, length
// preservation, inclusion in a recognizable relation, bounded theta checks.

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "dnacodec/errors.hpp"
#include "dnacodec/transducer.hpp"
#include "transducer_internal.hpp"

namespace dnacodec {

using detail::Arc;
using detail::Graph;
using detail::PathLabel;

namespace {

// Tree paths from the initial states and shortest completions to a final
// state over an explicit graph with arcs of type A.
template <class A>
struct Paths {
  const std::vector<std::vector<A>>& out;
  std::vector<std::pair<std::int64_t, const A*>> parent;
  std::vector<const A*> next;  // first arc on a shortest path to a final state
  std::vector<char> coreach;

  Paths(const std::vector<std::vector<A>>& o, const std::vector<char>& fin)
      : out(o), parent(o.size(), {-1, nullptr}), next(o.size(), nullptr), coreach(o.size(), 0) {
    std::vector<std::vector<std::pair<State, const A*>>> rev(o.size());
    for (State s = 0; s < o.size(); ++s)
      for (const A& a : o[s]) rev[a.target].push_back({s, &a});
    std::deque<State> q;
    for (State s = 0; s < o.size(); ++s)
      if (fin[s]) {
        coreach[s] = 1;
        q.push_back(s);
      }
    while (!q.empty()) {
      State s = q.front();
      q.pop_front();
      for (auto [p, a] : rev[s])
        if (!coreach[p]) {
          coreach[p] = 1;
          next[p] = a;
          q.push_back(p);
        }
    }
  }

  std::vector<const A*> to(State s) const {
    std::vector<const A*> arcs;
    for (std::int64_t c = s; parent[static_cast<std::size_t>(c)].first >= 0; c = parent[static_cast<std::size_t>(c)].first)
      arcs.push_back(parent[static_cast<std::size_t>(c)].second);
    std::reverse(arcs.begin(), arcs.end());
    return arcs;
  }

  std::vector<const A*> completion(State s) const {
    std::vector<const A*> arcs;
    while (next[s]) {
      arcs.push_back(next[s]);
      s = next[s]->target;
    }
    return arcs;
  }
};

// Difference between two words read so far, one always a prefix of the other.
struct Delay {
  Word ahead;
  bool first_ahead = true;  // ahead belongs to the first tape
  bool operator==(const Delay& o) const { return ahead == o.ahead && (ahead.empty() || first_ahead == o.first_ahead); }
  bool empty() const { return ahead.empty(); }
};

// Advance one tape by c. Returns false when the tapes become incomparable.
bool advance(Delay& d, char c, bool first) {
  if (d.ahead.empty()) {
    d.ahead.push_back(c);
    d.first_ahead = first;
    return true;
  }
  if (d.first_ahead == first) {
    d.ahead.push_back(c);
    return true;
  }
  if (d.ahead.front() != c) return false;
  d.ahead.erase(d.ahead.begin());
  return true;
}

PathLabel label_of(const std::vector<const Arc*>& arcs, const Alphabet& al) {
  PathLabel pl;
  for (const Arc* a : arcs) detail::append_arc(pl, *a, al);
  return pl;
}

template <class V>
V cat(V a, const V& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::optional<WordPair> partial_identity_counterexample(const Transducer& t) {
  const Graph g = detail::normal_graph(t);
  const Alphabet& al = t.alphabet();
  Paths<Arc> paths(g.out, g.fin);
  std::vector<std::optional<Delay>> delay(g.size());
  std::deque<State> q;
  auto differs = [&](const std::vector<const Arc*>& arcs) -> std::optional<WordPair> {
    PathLabel pl = label_of(arcs, al);
    if (pl.input != pl.output) return WordPair{pl.input, pl.output};
    return std::nullopt;
  };
  for (State s = 0; s < g.size(); ++s)
    if (g.init[s]) {
      delay[s] = Delay{};
      q.push_back(s);
    }
  while (!q.empty()) {
    State s = q.front();
    q.pop_front();
    for (const Arc& a : g.out[s]) {
      Delay d = *delay[s];
      bool first = a.in != kEpsilon;
      char c = al.symbol(first ? a.in : a.out);
      auto via = cat(paths.to(s), std::vector<const Arc*>{&a});
      if (!advance(d, c, first)) {
        if (auto w = differs(cat(via, paths.completion(a.target)))) return w;
        throw std::logic_error("identity check: incomparable delay without witness");
      }
      if (!delay[a.target]) {
        delay[a.target] = d;
        paths.parent[a.target] = {s, &a};
        if (g.fin[a.target] && !d.empty()) return differs(via);
        q.push_back(a.target);
      } else if (!(*delay[a.target] == d)) {
        auto tail = paths.completion(a.target);
        if (auto w = differs(cat(via, tail))) return w;
        if (auto w = differs(cat(paths.to(a.target), tail))) return w;
        throw std::logic_error("identity check: delay conflict without witness");
      }
    }
  }
  return std::nullopt;
}

bool is_partial_identity(const Transducer& t) { return !partial_identity_counterexample(t).has_value(); }

namespace {

// Synchronized square of a normal-form transducer with itself.
struct SqArc {
  Symbol in;    // shared input symbol or kEpsilon
  Symbol out1;  // output of the first copy or kEpsilon
  Symbol out2;
  State target;
};

}  // namespace

std::optional<FunctionalityWitness> functionality_counterexample(const Transducer& t) {
  const Graph g = detail::normal_graph(t);
  const Alphabet& al = t.alphabet();
  const std::size_t n = g.size();
  std::unordered_map<std::uint64_t, State> id;
  std::vector<std::vector<SqArc>> out;
  std::vector<char> fin, init;
  std::vector<std::pair<State, State>> states;
  auto get = [&](State p, State r) {
    auto key = (static_cast<std::uint64_t>(p) << 32) | r;
    auto [it, fresh] = id.emplace(key, 0);
    if (fresh) {
      it->second = static_cast<State>(states.size());
      states.emplace_back(p, r);
      out.emplace_back();
      fin.push_back(g.fin[p] && g.fin[r]);
      init.push_back(0);
    }
    return it->second;
  };
  for (State p = 0; p < n; ++p)
    if (g.init[p])
      for (State r = 0; r < n; ++r)
        if (g.init[r]) init[get(p, r)] = 1;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [p, r] = states[i];
    for (const Arc& a : g.out[p]) {
      if (a.in != kEpsilon) {
        for (const Arc& b : g.out[r])
          if (b.in == a.in) {
            State tgt = get(a.target, b.target);
            out[i].push_back({a.in, kEpsilon, kEpsilon, tgt});
          }
      } else {
        State tgt = get(a.target, r);
        out[i].push_back({kEpsilon, a.out, kEpsilon, tgt});
      }
    }
    for (const Arc& b : g.out[r])
      if (b.in == kEpsilon) {
        State tgt = get(p, b.target);
        out[i].push_back({kEpsilon, kEpsilon, b.out, tgt});
      }
  }
  Paths<SqArc> paths(out, fin);
  auto witness = [&](const std::vector<const SqArc*>& arcs) -> std::optional<FunctionalityWitness> {
    FunctionalityWitness w;
    for (const SqArc* a : arcs) {
      if (a->in != kEpsilon) w.input.push_back(al.symbol(a->in));
      if (a->out1 != kEpsilon) w.output1.push_back(al.symbol(a->out1));
      if (a->out2 != kEpsilon) w.output2.push_back(al.symbol(a->out2));
    }
    if (w.output1 != w.output2) return w;
    return std::nullopt;
  };
  std::vector<std::optional<Delay>> delay(states.size());
  std::deque<State> q;
  for (State s = 0; s < states.size(); ++s)
    if (init[s] && paths.coreach[s]) {
      delay[s] = Delay{};
      q.push_back(s);
    }
  while (!q.empty()) {
    State s = q.front();
    q.pop_front();
    for (const SqArc& a : out[s]) {
      if (!paths.coreach[a.target]) continue;
      Delay d = *delay[s];
      bool ok = true;
      if (a.out1 != kEpsilon) ok = advance(d, al.symbol(a.out1), true);
      if (a.out2 != kEpsilon) ok = advance(d, al.symbol(a.out2), false);
      auto via = cat(paths.to(s), std::vector<const SqArc*>{&a});
      if (!ok) {
        if (auto w = witness(cat(via, paths.completion(a.target)))) return w;
        throw std::logic_error("functionality check: incomparable outputs without witness");
      }
      if (!delay[a.target]) {
        delay[a.target] = d;
        paths.parent[a.target] = {s, &a};
        if (fin[a.target] && !d.empty()) return witness(via);
        q.push_back(a.target);
      } else if (!(*delay[a.target] == d)) {
        auto tail = paths.completion(a.target);
        if (auto w = witness(cat(via, tail))) return w;
        if (auto w = witness(cat(paths.to(a.target), tail))) return w;
        throw std::logic_error("functionality check: delay conflict without witness");
      }
    }
  }
  return std::nullopt;
}

bool is_functional(const Transducer& t) { return !functionality_counterexample(t).has_value(); }

std::optional<WordPair> length_counterexample(const Transducer& t) {
  const Graph g = detail::normal_graph(t);
  const Alphabet& al = t.alphabet();
  Paths<Arc> paths(g.out, g.fin);
  std::vector<std::optional<long>> bal(g.size());
  std::deque<State> q;
  auto check = [&](const std::vector<const Arc*>& arcs) -> std::optional<WordPair> {
    PathLabel pl = label_of(arcs, al);
    if (pl.input.size() != pl.output.size()) return WordPair{pl.input, pl.output};
    return std::nullopt;
  };
  for (State s = 0; s < g.size(); ++s)
    if (g.init[s]) {
      bal[s] = 0;
      q.push_back(s);
    }
  while (!q.empty()) {
    State s = q.front();
    q.pop_front();
    for (const Arc& a : g.out[s]) {
      long b = *bal[s] + (a.in != kEpsilon ? 1 : -1);
      auto via = cat(paths.to(s), std::vector<const Arc*>{&a});
      if (!bal[a.target]) {
        bal[a.target] = b;
        paths.parent[a.target] = {s, &a};
        if (g.fin[a.target] && b != 0) return check(via);
        q.push_back(a.target);
      } else if (*bal[a.target] != b) {
        auto tail = paths.completion(a.target);
        if (auto w = check(cat(via, tail))) return w;
        if (auto w = check(cat(paths.to(a.target), tail))) return w;
        throw std::logic_error("length check: balance conflict without witness");
      }
    }
  }
  return std::nullopt;
}

bool is_length_preserving(const Transducer& t) { return !length_counterexample(t).has_value(); }

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = v.size();
    for (State s : v) h = (h ^ s) * 0x100000001b3ULL + (h >> 31);
    return h;
  }
};

// States of a complete DFA from which a final state is reachable.
std::vector<char> live_states(const Nfa& dfa) {
  std::vector<std::vector<State>> rev(dfa.num_states());
  for (State s = 0; s < dfa.num_states(); ++s)
    for (const auto& e : dfa.edges(s)) rev[e.target].push_back(s);
  std::vector<char> live(dfa.num_states(), 0);
  std::vector<State> stack = dfa.final_states();
  for (State s : stack) live[s] = 1;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : rev[s])
      if (!live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
  }
  return live;
}

// Target of a complete DFA on sym.
State dfa_step(const Nfa& dfa, State s, Symbol sym) {
  for (const auto& e : dfa.edges(s))
    if (e.label == sym) return e.target;
  throw std::logic_error("incomplete DFA");
}

bool pair_less(const WordPair& a, const WordPair& b) {
  std::size_t la = a.input.size() + a.output.size(), lb = b.input.size() + b.output.size();
  if (la != lb) return la < lb;
  if (a.input != b.input) return shortlex_less(a.input, b.input);
  return shortlex_less(a.output, b.output);
}

}  // namespace

std::optional<WordPair> recognizable_inclusion_counterexample(const Transducer& t,
                                                              std::span<const RecognizablePart> parts,
                                                              const InclusionLimits& limits) {
  const Alphabet& al = t.alphabet();
  const std::size_t k = al.size();
  const std::size_t m = parts.size();
  Transducer tn = normalize(t);
  if (tn.num_states() == 0) return std::nullopt;

  // Deterministic product of the domain with every input component. Its
  // reachable tuples partition dom(t) into atoms by membership signature.
  std::vector<Nfa> dfas;
  dfas.reserve(m + 1);
  dfas.push_back(determinize(domain(tn), limits.state_cap));
  for (const auto& p : parts) {
    if (!(p.input.alphabet() == al) || !(p.output.alphabet() == al))
      throw DomainError("recognizable part over a different alphabet");
    dfas.push_back(determinize(p.input, limits.state_cap));
  }
  const std::vector<char> dom_live = live_states(dfas[0]);

  std::unordered_map<std::vector<State>, State, TupleHash> id;
  std::vector<std::vector<State>> tuples;
  Nfa product(al);
  auto get = [&](std::vector<State>&& tu) -> std::optional<State> {
    if (!dom_live[tu[0]]) return std::nullopt;
    auto it = id.find(tu);
    if (it != id.end()) return it->second;
    if (tuples.size() >= limits.state_cap || tuples.size() * dfas.size() >= limits.state_cap * 64)
      throw ResourceError("atom product exceeded the state cap (" + std::to_string(limits.state_cap) + ")");
    State s = product.add_state();
    id.emplace(tu, s);
    tuples.push_back(std::move(tu));
    return s;
  };
  {
    std::vector<State> start;
    for (const auto& d : dfas) start.push_back(d.initial_states().front());
    auto s = get(std::move(start));
    if (!s) return std::nullopt;
    product.set_initial(*s);
  }
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t sym = 0; sym < k; ++sym) {
      std::vector<State> nx(dfas.size());
      for (std::size_t j = 0; j < dfas.size(); ++j) nx[j] = dfa_step(dfas[j], tuples[i][j], static_cast<Symbol>(sym));
      if (auto tgt = get(std::move(nx))) product.add_edge(static_cast<State>(i), static_cast<Symbol>(sym), *tgt);
    }

  std::map<std::vector<bool>, std::vector<State>> atoms;
  for (State s = 0; s < tuples.size(); ++s) {
    if (!dfas[0].is_final(tuples[s][0])) continue;
    std::vector<bool> sig(m);
    for (std::size_t j = 0; j < m; ++j) sig[j] = dfas[j + 1].is_final(tuples[s][j + 1]);
    atoms[sig].push_back(s);
    if (atoms.size() > limits.atom_cap)
      throw ResourceError("number of atoms exceeded the cap (" + std::to_string(limits.atom_cap) + ")");
  }

  std::optional<WordPair> best;
  for (const auto& [sig, finals] : atoms) {
    Nfa atom = product;
    for (State s : finals) atom.set_final(s);
    Nfa allowed = Nfa::empty(al);
    for (std::size_t j = 0; j < m; ++j)
      if (sig[j]) allowed = unite(allowed, parts[j].output);
    Nfa forbidden = complement(allowed, limits.state_cap);
    if (auto w = find_pair(restrict_output(restrict_input(tn, atom), forbidden)))
      if (!best || pair_less(*w, *best)) best = w;
  }
  return best;
}

std::optional<Word> bounded_counterexample(const Transducer& t, const Permutation& theta, ThetaMode mode,
                                           std::size_t max_len, Execution ex) {
  if (!(t.alphabet() == theta.alphabet()))
    throw DomainError("transducer and theta use different alphabets");
  PairMatcher match(t);
  return search::first_word(
      t.alphabet(), 1, max_len,
      [&](const Word& w) {
        bool hit = match(w, theta.apply(w));
        return mode == ThetaMode::altering ? hit : !hit;
      },
      ex);
}

}  // namespace dnacodec
