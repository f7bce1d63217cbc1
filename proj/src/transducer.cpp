#include "dnacodec/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>

#include "dnacodec/errors.hpp"
#include "transducer_internal.hpp"

namespace dnacodec {

namespace detail {

Graph expand(const Transducer& t) {
  const Alphabet& al = t.alphabet();
  Graph g;
  for (State s = 0; s < t.num_states(); ++s) {
    g.add();
    g.init[s] = t.is_initial(s);
    g.fin[s] = t.is_final(s);
  }
  for (const auto& e : t.edges()) {
    std::vector<Arc> steps;
    for (char c : e.input) steps.push_back({al.index_of(c), kEpsilon, 0});
    for (char c : e.output) steps.push_back({kEpsilon, al.index_of(c), 0});
    if (steps.empty()) steps.push_back({kEpsilon, kEpsilon, 0});
    State cur = e.source;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      State next = (i + 1 == steps.size()) ? e.target : g.add();
      steps[i].target = next;
      g.out[cur].push_back(steps[i]);
      cur = next;
    }
  }
  return g;
}

Graph epsilon_free(const Graph& g) {
  bool any = false;
  for (const auto& v : g.out)
    for (const auto& a : v)
      if (a.in == kEpsilon && a.out == kEpsilon) any = true;
  if (!any) return g;
  const std::size_t n = g.size();
  Graph r;
  for (State s = 0; s < n; ++s) r.add();
  std::vector<std::uint32_t> mark(n, UINT32_MAX);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s) {
    r.init[s] = g.init[s];
    stack.assign(1, s);
    mark[s] = s;
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      if (g.fin[q]) r.fin[s] = 1;
      for (const auto& a : g.out[q]) {
        if (a.in == kEpsilon && a.out == kEpsilon) {
          if (mark[a.target] != s) {
            mark[a.target] = s;
            stack.push_back(a.target);
          }
        } else {
          r.out[s].push_back(a);
        }
      }
    }
  }
  return r;
}

Graph trim(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<char> fwd(n, 0), bwd(n, 0);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s)
    if (g.init[s]) {
      fwd[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& a : g.out[s])
      if (!fwd[a.target]) {
        fwd[a.target] = 1;
        stack.push_back(a.target);
      }
  }
  std::vector<std::vector<State>> rev(n);
  for (State s = 0; s < n; ++s)
    for (const auto& a : g.out[s]) rev[a.target].push_back(s);
  for (State s = 0; s < n; ++s)
    if (g.fin[s]) {
      bwd[s] = 1;
      stack.push_back(s);
    }
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
  Graph r;
  for (State s = 0; s < n; ++s)
    if (fwd[s] && bwd[s]) id[s] = r.add();
  for (State s = 0; s < n; ++s) {
    if (id[s] == UINT32_MAX) continue;
    r.init[id[s]] = g.init[s];
    r.fin[id[s]] = g.fin[s];
    for (const auto& a : g.out[s])
      if (id[a.target] != UINT32_MAX) r.out[id[s]].push_back({a.in, a.out, id[a.target]});
  }
  return r;
}

void canonicalize(Graph& g) {
  auto key = [](const Arc& a) {
    return std::make_tuple(a.in == kEpsilon ? 1 : 0, a.in, a.out, a.target);
  };
  for (auto& v : g.out) {
    std::sort(v.begin(), v.end(), [&](const Arc& x, const Arc& y) { return key(x) < key(y); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

Graph normal_graph(const Transducer& t) {
  Graph g = trim(epsilon_free(expand(t)));
  canonicalize(g);
  return g;
}

Transducer to_transducer(const Alphabet& al, const Graph& g) {
  Transducer t(al);
  t.add_states(g.size());
  for (State s = 0; s < g.size(); ++s) {
    t.set_initial(s, g.init[s]);
    t.set_final(s, g.fin[s]);
    for (const auto& a : g.out[s]) {
      std::string in = a.in == kEpsilon ? "" : std::string(1, al.symbol(a.in));
      std::string out = a.out == kEpsilon ? "" : std::string(1, al.symbol(a.out));
      t.add_edge(s, in, out, a.target);
    }
  }
  return t;
}

void append_arc(PathLabel& p, const Arc& a, const Alphabet& al) {
  if (a.in != kEpsilon) p.input.push_back(al.symbol(a.in));
  if (a.out != kEpsilon) p.output.push_back(al.symbol(a.out));
}

}  // namespace detail

using detail::Arc;
using detail::Graph;

namespace {

std::uint64_t pack(State a, State b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

void require_same(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw DomainError("alphabets differ: {" + a.symbols() + "} vs {" + b.symbols() + "}");
}

// Product builder keyed by a pair of component states.
struct PairProduct {
  Graph g;
  std::unordered_map<std::uint64_t, State> id;
  std::vector<std::pair<State, State>> work;

  State get(State p, State q, bool fin) {
    auto [it, fresh] = id.emplace(pack(p, q), 0);
    if (fresh) {
      it->second = g.add();
      g.fin[it->second] = fin;
      work.emplace_back(p, q);
    }
    return it->second;
  }
};

Transducer finish(const Alphabet& al, const Graph& g) {
  Graph r = detail::trim(detail::epsilon_free(g));
  detail::canonicalize(r);
  return detail::to_transducer(al, r);
}

}  // namespace

Transducer::Transducer(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

Transducer Transducer::empty(Alphabet alphabet) {
  Transducer t(std::move(alphabet));
  t.set_initial(t.add_state());
  return t;
}

Transducer Transducer::identity(Alphabet alphabet) {
  Transducer t(std::move(alphabet));
  State s = t.add_state();
  t.set_initial(s);
  t.set_final(s);
  for (char c : t.alphabet().symbols()) t.add_edge(s, std::string(1, c), std::string(1, c), s);
  return t;
}

Transducer Transducer::product(const Nfa& a, const Nfa& b) {
  require_same(a.alphabet(), b.alphabet());
  Transducer t(a.alphabet());
  const Alphabet& al = a.alphabet();
  t.add_states(a.num_states() + b.num_states());
  const State off = static_cast<State>(a.num_states());
  for (State s = 0; s < a.num_states(); ++s) {
    t.set_initial(s, a.is_initial(s));
    for (const auto& e : a.edges(s))
      t.add_edge(s, e.label == kEpsilon ? "" : std::string(1, al.symbol(e.label)), "", e.target);
    if (a.is_final(s))
      for (State q : b.initial_states()) t.add_edge(s, "", "", off + q);
  }
  for (State s = 0; s < b.num_states(); ++s) {
    t.set_final(off + s, b.is_final(s));
    for (const auto& e : b.edges(s))
      t.add_edge(off + s, "", e.label == kEpsilon ? "" : std::string(1, al.symbol(e.label)), off + e.target);
  }
  return t;
}

State Transducer::add_state() { return add_states(1); }

State Transducer::add_states(std::size_t n) {
  State first = static_cast<State>(initial_.size());
  initial_.resize(initial_.size() + n, 0);
  final_.resize(final_.size() + n, 0);
  return first;
}

void Transducer::add_edge(State from, std::string_view input, std::string_view output, State to) {
  if (from >= num_states() || to >= num_states()) throw DomainError("edge endpoint out of range");
  alphabet_.check_word(input);
  alphabet_.check_word(output);
  edges_.push_back({from, to, Word(input), Word(output)});
}

std::vector<State> Transducer::initial_states() const {
  std::vector<State> r;
  for (State s = 0; s < num_states(); ++s)
    if (initial_[s]) r.push_back(s);
  return r;
}

std::vector<State> Transducer::final_states() const {
  std::vector<State> r;
  for (State s = 0; s < num_states(); ++s)
    if (final_[s]) r.push_back(s);
  return r;
}

bool Transducer::is_normal() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.input.size() + e.output.size() == 1; });
}

Transducer Transducer::rebased(const Alphabet& superset) const {
  if (!alphabet_.is_subset_of(superset))
    throw DomainError("alphabet {" + alphabet_.symbols() + "} is not contained in {" + superset.symbols() + "}");
  Transducer t(superset);
  t.edges_ = edges_;
  t.initial_ = initial_;
  t.final_ = final_;
  return t;
}

Transducer normalize(const Transducer& t) { return detail::to_transducer(t.alphabet(), detail::normal_graph(t)); }

Transducer trim(const Transducer& t) {
  const std::size_t n = t.num_states();
  std::vector<std::vector<State>> fw(n), rev(n);
  for (const auto& e : t.edges()) {
    fw[e.source].push_back(e.target);
    rev[e.target].push_back(e.source);
  }
  auto sweep = [](const std::vector<std::vector<State>>& adj, std::vector<State> stack, std::vector<char>& mark) {
    for (State s : stack) mark[s] = 1;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State q : adj[s])
        if (!mark[q]) {
          mark[q] = 1;
          stack.push_back(q);
        }
    }
  };
  std::vector<char> fwd(n, 0), bwd(n, 0);
  sweep(fw, t.initial_states(), fwd);
  sweep(rev, t.final_states(), bwd);
  std::vector<State> id(n, UINT32_MAX);
  Transducer out(t.alphabet());
  for (State s = 0; s < n; ++s)
    if (fwd[s] && bwd[s]) {
      id[s] = out.add_state();
      out.set_initial(id[s], t.is_initial(s));
      out.set_final(id[s], t.is_final(s));
    }
  for (const auto& e : t.edges())
    if (id[e.source] != UINT32_MAX && id[e.target] != UINT32_MAX)
      out.add_edge(id[e.source], e.input, e.output, id[e.target]);
  return out;
}

Transducer inverse(const Transducer& t) {
  Transducer r(t.alphabet());
  r.add_states(t.num_states());
  for (State s = 0; s < t.num_states(); ++s) {
    r.set_initial(s, t.is_initial(s));
    r.set_final(s, t.is_final(s));
  }
  for (const auto& e : t.edges()) r.add_edge(e.source, e.output, e.input, e.target);
  return r;
}

Transducer unite(const Transducer& a, const Transducer& b) {
  require_same(a.alphabet(), b.alphabet());
  Transducer r = a;
  State off = r.add_states(b.num_states());
  for (State s = 0; s < b.num_states(); ++s) {
    r.set_initial(off + s, b.is_initial(s));
    r.set_final(off + s, b.is_final(s));
  }
  for (const auto& e : b.edges()) r.add_edge(off + e.source, e.input, e.output, off + e.target);
  return r;
}

Transducer compose(const Transducer& a, const Transducer& b) {
  require_same(a.alphabet(), b.alphabet());
  const Graph ga = detail::normal_graph(a);
  const Graph gb = detail::normal_graph(b);
  PairProduct pp;
  // Pairs are (state of b, state of a).
  for (State p = 0; p < gb.size(); ++p)
    if (gb.init[p])
      for (State q = 0; q < ga.size(); ++q)
        if (ga.init[q]) pp.g.init[pp.get(p, q, gb.fin[p] && ga.fin[q])] = 1;
  while (!pp.work.empty()) {
    auto [p, q] = pp.work.back();
    pp.work.pop_back();
    State src = pp.id[pack(p, q)];
    for (const Arc& x : gb.out[p]) {
      if (x.out == kEpsilon) {
        State t = pp.get(x.target, q, gb.fin[x.target] && ga.fin[q]);
        pp.g.out[src].push_back({x.in, kEpsilon, t});
      } else {
        for (const Arc& y : ga.out[q])
          if (y.in == x.out) {
            State t = pp.get(x.target, y.target, gb.fin[x.target] && ga.fin[y.target]);
            pp.g.out[src].push_back({kEpsilon, kEpsilon, t});
          }
      }
    }
    for (const Arc& y : ga.out[q])
      if (y.in == kEpsilon) {
        State t = pp.get(p, y.target, gb.fin[p] && ga.fin[y.target]);
        pp.g.out[src].push_back({kEpsilon, y.out, t});
      }
  }
  return finish(a.alphabet(), pp.g);
}

namespace {

// on_input selects whether l constrains the input or the output tape.
Transducer restrict_side(const Transducer& t, const Nfa& l, bool on_input) {
  require_same(t.alphabet(), l.alphabet());
  const Graph gt = detail::normal_graph(t);
  PairProduct pp;
  for (State p = 0; p < gt.size(); ++p)
    if (gt.init[p])
      for (State q : l.initial_states()) pp.g.init[pp.get(p, q, gt.fin[p] && l.is_final(q))] = 1;
  while (!pp.work.empty()) {
    auto [p, q] = pp.work.back();
    pp.work.pop_back();
    State src = pp.id[pack(p, q)];
    for (const Arc& x : gt.out[p]) {
      Symbol side = on_input ? x.in : x.out;
      if (side == kEpsilon) {
        State t = pp.get(x.target, q, gt.fin[x.target] && l.is_final(q));
        pp.g.out[src].push_back({x.in, x.out, t});
      } else {
        for (const auto& e : l.edges(q))
          if (e.label == side) {
            State t = pp.get(x.target, e.target, gt.fin[x.target] && l.is_final(e.target));
            pp.g.out[src].push_back({x.in, x.out, t});
          }
      }
    }
    for (const auto& e : l.edges(q))
      if (e.label == kEpsilon) {
        State t = pp.get(p, e.target, gt.fin[p] && l.is_final(e.target));
        pp.g.out[src].push_back({kEpsilon, kEpsilon, t});
      }
  }
  return finish(t.alphabet(), pp.g);
}

Nfa project(const Transducer& t, bool input_side) {
  const Graph g = detail::normal_graph(t);
  Nfa r(t.alphabet());
  r.add_states(g.size());
  for (State s = 0; s < g.size(); ++s) {
    r.set_initial(s, g.init[s]);
    r.set_final(s, g.fin[s]);
    for (const Arc& a : g.out[s]) r.add_edge(s, input_side ? a.in : a.out, a.target);
  }
  return trim(r);
}

}  // namespace

Transducer restrict_input(const Transducer& t, const Nfa& l) { return restrict_side(t, l, true); }
Transducer restrict_output(const Transducer& t, const Nfa& l) { return restrict_side(t, l, false); }

Transducer relabel_output(const Transducer& t, const Permutation& p) {
  require_same(t.alphabet(), p.alphabet());
  Transducer r(t.alphabet());
  r.add_states(t.num_states());
  for (State s = 0; s < t.num_states(); ++s) {
    r.set_initial(s, t.is_initial(s));
    r.set_final(s, t.is_final(s));
  }
  for (const auto& e : t.edges()) {
    Word out = e.output;
    for (char& c : out) c = p.map_char(c);
    r.add_edge(e.source, e.input, out, e.target);
  }
  return r;
}

Nfa domain(const Transducer& t) { return project(t, true); }
Nfa range(const Transducer& t) { return project(t, false); }
Nfa image(const Transducer& t, const Nfa& l) { return range(restrict_input(t, l)); }

std::optional<WordPair> find_pair(const Transducer& t) {
  const Graph g = detail::normal_graph(t);
  const std::size_t n = g.size();
  std::vector<std::pair<std::int64_t, const Arc*>> parent(n, {-1, nullptr});
  std::vector<char> seen(n, 0);
  std::deque<State> q;
  for (State s = 0; s < n; ++s)
    if (g.init[s]) {
      seen[s] = 1;
      q.push_back(s);
    }
  while (!q.empty()) {
    State s = q.front();
    q.pop_front();
    if (g.fin[s]) {
      std::vector<const Arc*> arcs;
      for (std::int64_t c = s; parent[static_cast<std::size_t>(c)].first >= 0;
           c = parent[static_cast<std::size_t>(c)].first)
        arcs.push_back(parent[static_cast<std::size_t>(c)].second);
      detail::PathLabel pl;
      for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) detail::append_arc(pl, **it, t.alphabet());
      return WordPair{pl.input, pl.output};
    }
    for (const Arc& a : g.out[s])
      if (!seen[a.target]) {
        seen[a.target] = 1;
        parent[a.target] = {s, &a};
        q.push_back(a.target);
      }
  }
  return std::nullopt;
}

bool relation_empty(const Transducer& t) { return !find_pair(t).has_value(); }

std::set<WordPair> enumerate_pairs(const Transducer& t, std::size_t max_total) {
  const Graph g = detail::normal_graph(t);
  std::set<std::tuple<State, Word, Word>> level, next;
  std::set<WordPair> out;
  for (State s = 0; s < g.size(); ++s)
    if (g.init[s]) level.insert({s, Word{}, Word{}});
  for (std::size_t depth = 0; !level.empty(); ++depth) {
    for (const auto& [s, x, y] : level)
      if (g.fin[s]) out.insert({x, y});
    if (depth == max_total) break;
    next.clear();
    for (const auto& [s, x, y] : level)
      for (const Arc& a : g.out[s]) {
        Word x2 = x, y2 = y;
        if (a.in != kEpsilon) x2.push_back(t.alphabet().symbol(a.in));
        if (a.out != kEpsilon) y2.push_back(t.alphabet().symbol(a.out));
        next.insert({a.target, std::move(x2), std::move(y2)});
      }
    level.swap(next);
  }
  return out;
}

PairMatcher::PairMatcher(const Transducer& t) : alphabet_(t.alphabet()) {
  const Graph g = detail::normal_graph(t);
  arcs_.resize(g.size());
  final_.assign(g.fin.begin(), g.fin.end());
  for (State s = 0; s < g.size(); ++s) {
    if (g.init[s]) initial_.push_back(s);
    for (const detail::Arc& a : g.out[s]) arcs_[s].push_back({a.in, a.out, a.target});
  }
}

bool PairMatcher::operator()(std::string_view x, std::string_view y) const {
  const std::size_t n = arcs_.size();
  if (n == 0) return false;
  std::vector<Symbol> xs, ys;
  for (char c : x) {
    auto s = alphabet_.find(c);
    if (!s) return false;
    xs.push_back(*s);
  }
  for (char c : y) {
    auto s = alphabet_.find(c);
    if (!s) return false;
    ys.push_back(*s);
  }
  const std::size_t w = ys.size() + 1;
  const std::size_t cells = (xs.size() + 1) * w;
  std::vector<char> seen(n * cells, 0);
  std::vector<std::uint64_t> stack;
  auto push = [&](State s, std::size_t i, std::size_t j) {
    std::uint64_t idx = static_cast<std::uint64_t>(s) * cells + i * w + j;
    if (!seen[idx]) {
      seen[idx] = 1;
      stack.push_back(idx);
    }
  };
  for (State s : initial_) push(s, 0, 0);
  while (!stack.empty()) {
    std::uint64_t idx = stack.back();
    stack.pop_back();
    State s = static_cast<State>(idx / cells);
    std::size_t rest = idx % cells, i = rest / w, j = rest % w;
    if (i == xs.size() && j == ys.size() && final_[s]) return true;
    for (const Arc& a : arcs_[s]) {
      if (a.in != kEpsilon) {
        if (i < xs.size() && xs[i] == a.in) push(a.target, i + 1, j);
      } else if (j < ys.size() && ys[j] == a.out) {
        push(a.target, i, j + 1);
      }
    }
  }
  return false;
}

bool realizes(const Transducer& t, std::string_view x, std::string_view y) { return PairMatcher(t)(x, y); }

}  // namespace dnacodec
