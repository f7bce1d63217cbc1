#include "dnacodec/nfa.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>

#include "dnacodec/errors.hpp"

namespace dnacodec {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
    for (State s : v) h = (h ^ s) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

struct PairHash {
  std::size_t operator()(std::uint64_t v) const noexcept { return std::hash<std::uint64_t>{}(v * 0x9e3779b97f4a7c15ULL); }
};

std::uint64_t pack(State a, State b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

void require_same_alphabet(const Nfa& a, const Nfa& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw DomainError("automata over different alphabets: {" + a.alphabet().symbols() + "} vs {" +
                      b.alphabet().symbols() + "}");
}

// On-the-fly subset construction over symbols 0..k-1.
class SubsetStepper {
 public:
  explicit SubsetStepper(const Nfa& a) : a_(a), mark_(a.num_states(), 0) {}

  std::vector<State> closure(std::vector<State> set) {
    ++stamp_;
    std::vector<State> stack;
    for (State s : set)
      if (mark_[s] != stamp_) {
        mark_[s] = stamp_;
        stack.push_back(s);
      }
    std::vector<State> out;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      out.push_back(s);
      for (const auto& e : a_.edges(s))
        if (e.label == kEpsilon && mark_[e.target] != stamp_) {
          mark_[e.target] = stamp_;
          stack.push_back(e.target);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<State> initial() { return closure(a_.initial_states()); }

  std::vector<State> step(const std::vector<State>& set, Symbol sym) {
    std::vector<State> next;
    for (State s : set)
      for (const auto& e : a_.edges(s))
        if (e.label == sym) next.push_back(e.target);
    return closure(std::move(next));
  }

  bool accepting(const std::vector<State>& set) const {
    return std::any_of(set.begin(), set.end(), [&](State s) { return a_.is_final(s); });
  }

 private:
  const Nfa& a_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

Word rebuild(const std::vector<std::pair<std::int64_t, Symbol>>& parent, std::int64_t node, const Alphabet& al) {
  Word w;
  while (node >= 0 && parent[static_cast<std::size_t>(node)].first >= 0) {
    Symbol s = parent[static_cast<std::size_t>(node)].second;
    if (s != kEpsilon) w.push_back(al.symbol(s));
    node = parent[static_cast<std::size_t>(node)].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::size_t default_state_cap() {
  if (const char* env = std::getenv("DNACODEC_STATE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

Nfa::Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

Nfa Nfa::empty(Alphabet alphabet) {
  Nfa a(std::move(alphabet));
  a.set_initial(a.add_state());
  return a;
}

Nfa Nfa::epsilon(Alphabet alphabet) {
  Nfa a(std::move(alphabet));
  State s = a.add_state();
  a.set_initial(s);
  a.set_final(s);
  return a;
}

Nfa Nfa::universal(Alphabet alphabet) {
  Nfa a = epsilon(std::move(alphabet));
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) a.add_edge(0, static_cast<Symbol>(i), 0);
  return a;
}

Nfa Nfa::nonempty(Alphabet alphabet) {
  Nfa a(std::move(alphabet));
  State s = a.add_state(), t = a.add_state();
  a.set_initial(s);
  a.set_final(t);
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
    a.add_edge(s, static_cast<Symbol>(i), t);
    a.add_edge(t, static_cast<Symbol>(i), t);
  }
  return a;
}

Nfa Nfa::word(Alphabet alphabet, std::string_view w) {
  Nfa a(std::move(alphabet));
  State s = a.add_state();
  a.set_initial(s);
  for (char c : w) {
    State t = a.add_state();
    a.add_edge(s, c, t);
    s = t;
  }
  a.set_final(s);
  return a;
}

Nfa Nfa::words(Alphabet alphabet, std::span<const Word> ws) {
  // A trie.
  Nfa a(std::move(alphabet));
  State root = a.add_state();
  a.set_initial(root);
  std::map<std::pair<State, Symbol>, State> child;
  for (const Word& w : ws) {
    State s = root;
    for (char c : w) {
      Symbol sym = a.alphabet().index_of(c);
      auto it = child.find({s, sym});
      if (it == child.end()) {
        State t = a.add_state();
        a.add_edge(s, sym, t);
        it = child.emplace(std::make_pair(s, sym), t).first;
      }
      s = it->second;
    }
    a.set_final(s);
  }
  return a;
}

std::size_t Nfa::num_edges() const {
  std::size_t n = 0;
  for (const auto& v : out_) n += v.size();
  return n;
}

State Nfa::add_state() { return add_states(1); }

State Nfa::add_states(std::size_t n) {
  State first = static_cast<State>(out_.size());
  out_.resize(out_.size() + n);
  initial_.resize(out_.size(), 0);
  final_.resize(out_.size(), 0);
  return first;
}

void Nfa::add_edge(State from, Symbol label, State to) {
  if (label != kEpsilon && (label < 0 || static_cast<std::size_t>(label) >= alphabet_.size()))
    throw DomainError("edge label outside the alphabet");
  out_[from].push_back({label, to});
}

std::vector<State> Nfa::initial_states() const {
  std::vector<State> r;
  for (State s = 0; s < num_states(); ++s)
    if (initial_[s]) r.push_back(s);
  return r;
}

std::vector<State> Nfa::final_states() const {
  std::vector<State> r;
  for (State s = 0; s < num_states(); ++s)
    if (final_[s]) r.push_back(s);
  return r;
}

bool Nfa::has_epsilon() const {
  for (const auto& v : out_)
    for (const auto& e : v)
      if (e.label == kEpsilon) return true;
  return false;
}

void Nfa::canonicalize() {
  for (auto& v : out_) {
    std::sort(v.begin(), v.end(), [](const Edge& x, const Edge& y) {
      return x.label != y.label ? x.label < y.label : x.target < y.target;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

bool Nfa::accepts(std::string_view w) const {
  if (!alphabet_.contains_word(w)) return false;
  SubsetStepper st(*this);
  auto cur = st.initial();
  for (char c : w) {
    cur = st.step(cur, alphabet_.index_of(c));
    if (cur.empty()) return false;
  }
  return st.accepting(cur);
}

Nfa Nfa::rebased(const Alphabet& superset) const {
  if (!alphabet_.is_subset_of(superset))
    throw DomainError("alphabet {" + alphabet_.symbols() + "} is not contained in {" + superset.symbols() + "}");
  Nfa r(superset);
  r.add_states(num_states());
  for (State s = 0; s < num_states(); ++s) {
    r.set_initial(s, initial_[s]);
    r.set_final(s, final_[s]);
    for (const auto& e : out_[s])
      r.add_edge(s, e.label == kEpsilon ? kEpsilon : superset.index_of(alphabet_.symbol(e.label)), e.target);
  }
  return r;
}

std::vector<State> epsilon_closure(const Nfa& a, std::vector<State> states) {
  SubsetStepper st(a);
  return st.closure(std::move(states));
}

Nfa remove_epsilon(const Nfa& a) {
  if (!a.has_epsilon()) return a;
  Nfa r(a.alphabet());
  r.add_states(a.num_states());
  SubsetStepper st(a);
  for (State s = 0; s < a.num_states(); ++s) {
    r.set_initial(s, a.is_initial(s));
    auto cl = st.closure({s});
    for (State q : cl) {
      if (a.is_final(q)) r.set_final(s);
      for (const auto& e : a.edges(q))
        if (e.label != kEpsilon) r.add_edge(s, e.label, e.target);
    }
  }
  r.canonicalize();
  return trim(r);
}

Nfa trim(const Nfa& a) {
  const std::size_t n = a.num_states();
  std::vector<char> fwd(n, 0), bwd(n, 0);
  std::vector<State> stack = a.initial_states();
  for (State s : stack) fwd[s] = 1;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(s))
      if (!fwd[e.target]) {
        fwd[e.target] = 1;
        stack.push_back(e.target);
      }
  }
  std::vector<std::vector<State>> rev(n);
  for (State s = 0; s < n; ++s)
    for (const auto& e : a.edges(s)) rev[e.target].push_back(s);
  stack = a.final_states();
  for (State s : stack) bwd[s] = 1;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : rev[s])
      if (!bwd[p]) {
        bwd[p] = 1;
        stack.push_back(p);
      }
  }
  std::vector<State> id(n, UINT32_MAX);
  Nfa r(a.alphabet());
  for (State s = 0; s < n; ++s)
    if (fwd[s] && bwd[s]) id[s] = r.add_state();
  for (State s = 0; s < n; ++s) {
    if (id[s] == UINT32_MAX) continue;
    r.set_initial(id[s], a.is_initial(s));
    r.set_final(id[s], a.is_final(s));
    for (const auto& e : a.edges(s))
      if (id[e.target] != UINT32_MAX) r.add_edge(id[s], e.label, id[e.target]);
  }
  r.canonicalize();
  return r;
}

Nfa reverse(const Nfa& a) {
  Nfa r(a.alphabet());
  r.add_states(a.num_states());
  for (State s = 0; s < a.num_states(); ++s) {
    r.set_initial(s, a.is_final(s));
    r.set_final(s, a.is_initial(s));
    for (const auto& e : a.edges(s)) r.add_edge(e.target, e.label, s);
  }
  return r;
}

Nfa intersect(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Nfa r(a.alphabet());
  std::unordered_map<std::uint64_t, State, PairHash> id;
  std::vector<std::pair<State, State>> work;
  auto get = [&](State p, State q) {
    auto [it, fresh] = id.emplace(pack(p, q), 0);
    if (fresh) {
      it->second = r.add_state();
      r.set_final(it->second, a.is_final(p) && b.is_final(q));
      work.emplace_back(p, q);
    }
    return it->second;
  };
  for (State p : a.initial_states())
    for (State q : b.initial_states()) r.set_initial(get(p, q));
  while (!work.empty()) {
    auto [p, q] = work.back();
    work.pop_back();
    State src = id[pack(p, q)];
    for (const auto& e : a.edges(p)) {
      if (e.label == kEpsilon) {
        r.add_edge(src, kEpsilon, get(e.target, q));
        continue;
      }
      for (const auto& f : b.edges(q))
        if (f.label == e.label) r.add_edge(src, e.label, get(e.target, f.target));
    }
    for (const auto& f : b.edges(q))
      if (f.label == kEpsilon) r.add_edge(src, kEpsilon, get(p, f.target));
  }
  return trim(r);
}

Nfa unite(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Nfa r = a;
  State off = r.add_states(b.num_states());
  for (State s = 0; s < b.num_states(); ++s) {
    r.set_initial(off + s, b.is_initial(s));
    r.set_final(off + s, b.is_final(s));
    for (const auto& e : b.edges(s)) r.add_edge(off + s, e.label, off + e.target);
  }
  return r;
}

Nfa concat(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Nfa r = a;
  State off = r.add_states(b.num_states());
  for (State s = 0; s < a.num_states(); ++s) {
    if (!a.is_final(s)) continue;
    r.set_final(s, false);
    for (State t : b.initial_states()) r.add_edge(s, kEpsilon, off + t);
  }
  for (State s = 0; s < b.num_states(); ++s) {
    r.set_final(off + s, b.is_final(s));
    for (const auto& e : b.edges(s)) r.add_edge(off + s, e.label, off + e.target);
  }
  return r;
}

Nfa plus(const Nfa& a) {
  Nfa r(a.alphabet());
  State hub = r.add_state();
  State off = r.add_states(a.num_states());
  r.set_initial(hub);
  for (State s = 0; s < a.num_states(); ++s) {
    if (a.is_initial(s)) r.add_edge(hub, kEpsilon, off + s);
    if (a.is_final(s)) {
      r.set_final(off + s);
      r.add_edge(off + s, kEpsilon, hub);
    }
    for (const auto& e : a.edges(s)) r.add_edge(off + s, e.label, off + e.target);
  }
  return r;
}

Nfa star(const Nfa& a) {
  Nfa r = plus(a);
  r.set_final(0);
  return r;
}

Nfa relabel(const Nfa& a, const Permutation& p) {
  if (!(a.alphabet() == p.alphabet())) throw DomainError("permutation alphabet does not match the automaton");
  Nfa r(a.alphabet());
  r.add_states(a.num_states());
  for (State s = 0; s < a.num_states(); ++s) {
    r.set_initial(s, a.is_initial(s));
    r.set_final(s, a.is_final(s));
    for (const auto& e : a.edges(s)) r.add_edge(s, e.label == kEpsilon ? kEpsilon : p.map(e.label), e.target);
  }
  return r;
}

Nfa determinize(const Nfa& a, std::size_t cap) {
  const std::size_t k = a.alphabet().size();
  SubsetStepper st(a);
  Nfa r(a.alphabet());
  std::unordered_map<std::vector<State>, State, VecHash> id;
  std::vector<std::vector<State>> sets;
  auto get = [&](std::vector<State>&& set) {
    auto it = id.find(set);
    if (it != id.end()) return it->second;
    if (sets.size() >= cap)
      throw ResourceError("subset construction exceeded the state cap (" + std::to_string(cap) + ")");
    State s = r.add_state();
    r.set_final(s, st.accepting(set));
    id.emplace(set, s);
    sets.push_back(std::move(set));
    return s;
  };
  r.set_initial(get(st.initial()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t sym = 0; sym < k; ++sym) {
      auto next = st.step(sets[i], static_cast<Symbol>(sym));
      State t = get(std::move(next));
      r.add_edge(static_cast<State>(i), static_cast<Symbol>(sym), t);
    }
  }
  return r;
}

Nfa complement(const Nfa& a, std::size_t cap) {
  Nfa d = determinize(a, cap);
  for (State s = 0; s < d.num_states(); ++s) d.set_final(s, !d.is_final(s));
  return d;
}

std::optional<Word> shortest_word(const Nfa& a) {
  // Level order BFS over groups of states that share a word. Groups are
  // expanded in word order and symbols in alphabet order, so each state is
  // first reached by its least word.
  const std::size_t n = a.num_states();
  if (n == 0) return std::nullopt;
  std::vector<std::pair<std::int64_t, Symbol>> parent(n, {-1, kEpsilon});
  std::vector<char> seen(n, 0);
  std::optional<State> found;

  auto visit = [&](State start, std::int64_t from, Symbol via, std::vector<State>& into) {
    if (seen[start]) return;
    seen[start] = 1;
    parent[start] = {from, via};
    std::vector<State> stack{start};
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      into.push_back(s);
      if (!found && a.is_final(s)) found = s;
      for (const auto& e : a.edges(s))
        if (e.label == kEpsilon && !seen[e.target]) {
          seen[e.target] = 1;
          parent[e.target] = {s, kEpsilon};
          stack.push_back(e.target);
        }
    }
  };

  std::vector<std::vector<State>> level(1), next;
  for (State s : a.initial_states()) visit(s, -1, kEpsilon, level[0]);
  const auto k = static_cast<Symbol>(a.alphabet().size());
  while (!found && !level.empty()) {
    next.clear();
    for (const auto& group : level)
      for (Symbol c = 0; c < k; ++c) {
        std::vector<State> child;
        for (State p : group)
          for (const auto& e : a.edges(p))
            if (e.label == c) visit(e.target, p, c, child);
        if (!child.empty()) next.push_back(std::move(child));
      }
    level.swap(next);
  }
  if (!found) return std::nullopt;
  return rebuild(parent, *found, a.alphabet());
}

bool is_empty(const Nfa& a) { return !shortest_word(a).has_value(); }

std::optional<Word> missing_word(const Nfa& a, std::size_t cap) {
  const std::size_t k = a.alphabet().size();
  SubsetStepper st(a);
  std::unordered_map<std::vector<State>, std::int64_t, VecHash> id;
  std::vector<std::vector<State>> sets;
  std::vector<std::pair<std::int64_t, Symbol>> parent;
  auto start = st.initial();
  if (!st.accepting(start)) return Word{};
  id.emplace(start, 0);
  sets.push_back(std::move(start));
  parent.push_back({-1, kEpsilon});
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t sym = 0; sym < k; ++sym) {
      auto next = st.step(sets[i], static_cast<Symbol>(sym));
      if (id.count(next)) continue;
      std::int64_t node = static_cast<std::int64_t>(sets.size());
      parent.push_back({static_cast<std::int64_t>(i), static_cast<Symbol>(sym)});
      if (!st.accepting(next)) return rebuild(parent, node, a.alphabet());
      if (sets.size() >= cap)
        throw ResourceError("universality check exceeded the state cap (" + std::to_string(cap) + ")");
      id.emplace(next, node);
      sets.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

bool is_universal(const Nfa& a, std::size_t cap) { return !missing_word(a, cap).has_value(); }

Nfa theta_image(const Nfa& a, const Permutation& theta) {
  Nfa r = relabel(a, theta);
  if (theta.antimorphic()) r = reverse(r);
  return r;
}

std::vector<Word> enumerate(const Nfa& a, std::size_t max_len, std::size_t limit) {
  const std::size_t n = a.num_states();
  std::vector<Word> out;
  if (n == 0) return out;
  // dist[s]: fewest letters from s to a final state (epsilon moves are free).
  constexpr std::size_t kInf = SIZE_MAX;
  std::vector<std::size_t> dist(n, kInf);
  std::vector<std::vector<std::pair<State, bool>>> rev(n);
  for (State s = 0; s < n; ++s)
    for (const auto& e : a.edges(s)) rev[e.target].push_back({s, e.label == kEpsilon});
  std::deque<State> dq;
  for (State s : a.final_states()) {
    dist[s] = 0;
    dq.push_back(s);
  }
  while (!dq.empty()) {
    State s = dq.front();
    dq.pop_front();
    for (auto [p, eps] : rev[s]) {
      std::size_t d = dist[s] + (eps ? 0 : 1);
      if (d < dist[p]) {
        dist[p] = d;
        if (eps)
          dq.push_front(p);
        else
          dq.push_back(p);
      }
    }
  }
  SubsetStepper st(a);
  auto reach = [&](const std::vector<State>& set) {
    std::size_t best = kInf;
    for (State s : set) best = std::min(best, dist[s]);
    return best;
  };
  std::vector<std::pair<Word, std::vector<State>>> level, next;
  auto start = st.initial();
  if (reach(start) <= max_len) level.emplace_back(Word{}, std::move(start));
  for (std::size_t len = 0; !level.empty(); ++len) {
    for (auto& [w, set] : level)
      if (st.accepting(set)) {
        if (out.size() >= limit) throw ResourceError("enumeration exceeded its limit");
        out.push_back(w);
      }
    if (len == max_len) break;
    next.clear();
    for (auto& [w, set] : level)
      for (std::size_t sym = 0; sym < a.alphabet().size(); ++sym) {
        auto s2 = st.step(set, static_cast<Symbol>(sym));
        if (s2.empty() || reach(s2) + len + 1 > max_len) continue;
        if (next.size() >= limit) throw ResourceError("enumeration exceeded its limit");
        next.emplace_back(w + a.alphabet().symbol(static_cast<Symbol>(sym)), std::move(s2));
      }
    level.swap(next);
  }
  return out;
}

std::optional<Word> difference_witness(const Nfa& a, const Nfa& b, std::size_t cap) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet().size();
  SubsetStepper sa(a), sb(b);
  using Key = std::vector<State>;
  // Encode the pair of subsets as one vector with a separator.
  auto key = [](const Key& x, const Key& y) {
    Key r = x;
    r.push_back(UINT32_MAX);
    r.insert(r.end(), y.begin(), y.end());
    return r;
  };
  std::unordered_map<Key, std::int64_t, VecHash> id;
  std::vector<std::pair<Key, Key>> nodes;
  std::vector<std::pair<std::int64_t, Symbol>> parent;
  auto x0 = sa.initial(), y0 = sb.initial();
  if (sa.accepting(x0) != sb.accepting(y0)) return Word{};
  id.emplace(key(x0, y0), 0);
  nodes.emplace_back(std::move(x0), std::move(y0));
  parent.push_back({-1, kEpsilon});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t sym = 0; sym < k; ++sym) {
      auto x = sa.step(nodes[i].first, static_cast<Symbol>(sym));
      auto y = sb.step(nodes[i].second, static_cast<Symbol>(sym));
      auto kk = key(x, y);
      if (id.count(kk)) continue;
      std::int64_t node = static_cast<std::int64_t>(nodes.size());
      parent.push_back({static_cast<std::int64_t>(i), static_cast<Symbol>(sym)});
      if (sa.accepting(x) != sb.accepting(y)) return rebuild(parent, node, a.alphabet());
      if (nodes.size() >= cap) throw ResourceError("equivalence check exceeded the state cap");
      id.emplace(std::move(kk), node);
      nodes.emplace_back(std::move(x), std::move(y));
    }
  }
  return std::nullopt;
}

bool equivalent(const Nfa& a, const Nfa& b, std::size_t cap) { return !difference_witness(a, b, cap).has_value(); }

}  // namespace dnacodec
