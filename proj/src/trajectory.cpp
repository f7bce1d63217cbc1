#include "dnacodec/trajectory.hpp"

#include <unordered_map>
#include <vector>

#include "dnacodec/errors.hpp"
#include "dnacodec/regex.hpp"

namespace dnacodec {

namespace {

void check_trajectory(std::string_view t) {
  for (char c : t)
    if (c != '0' && c != '1') throw DomainError("trajectory symbols must be 0 or 1");
}

const Alphabet& binary() {
  static const Alphabet al("01");
  return al;
}

}  // namespace

std::optional<Word> shuffle_on_trajectory(std::string_view x, std::string_view t, std::string_view w) {
  check_trajectory(t);
  std::size_t i = 0, j = 0;
  Word out;
  for (char c : t) {
    if (c == '0') {
      if (i >= x.size()) return std::nullopt;
      out.push_back(x[i++]);
    } else {
      if (j >= w.size()) return std::nullopt;
      out.push_back(w[j++]);
    }
  }
  if (i != x.size() || j != w.size()) return std::nullopt;
  return out;
}

std::optional<Word> delete_on_trajectory(std::string_view x, std::string_view t, std::string_view w) {
  check_trajectory(t);
  if (t.size() != x.size()) return std::nullopt;
  Word y;
  std::size_t j = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '0') {
      y.push_back(x[i]);
    } else {
      if (j >= w.size() || w[j] != x[i]) return std::nullopt;
      ++j;
    }
  }
  if (j != w.size()) return std::nullopt;
  return y;
}

Nfa parse_trajectory(std::string_view regex) { return remove_epsilon(parse_regex(regex, binary())); }

Transducer trajectory_transducer(TrajectoryOp op, std::string_view regex, const Alphabet& alphabet) {
  if (op == TrajectoryOp::delete_star)
    return inverse(trajectory_transducer(TrajectoryOp::shuffle_star, regex, alphabet));
  if (op == TrajectoryOp::delete_plus)
    return inverse(trajectory_transducer(TrajectoryOp::shuffle_plus, regex, alphabet));

  const bool plus = op == TrajectoryOp::shuffle_plus;
  const Nfa e = parse_trajectory(regex);
  const std::size_t n = e.num_states();
  const std::size_t layers = plus ? 2 : 1;
  Transducer t(alphabet);
  t.add_states(n * layers);
  auto at = [&](State s, std::size_t layer) { return static_cast<State>(layer * n + s); };
  for (State s = 0; s < n; ++s) {
    t.set_initial(at(s, 0), e.is_initial(s));
    t.set_final(at(s, layers - 1), e.is_final(s));
    for (const auto& edge : e.edges(s)) {
      const bool inserts = edge.label == 1;  // symbol '1'
      for (std::size_t layer = 0; layer < layers; ++layer) {
        std::size_t to = inserts ? layers - 1 : layer;
        for (char c : alphabet.symbols()) {
          std::string a(1, c);
          if (inserts)
            t.add_edge(at(s, layer), "", a, at(edge.target, to));
          else
            t.add_edge(at(s, layer), a, a, at(edge.target, to));
        }
      }
    }
  }
  return t;
}

namespace {

// States (x-state, e-state, flag) built by worklist.
struct TripleProduct {
  Nfa r;
  std::unordered_map<std::uint64_t, State> id;
  std::vector<std::tuple<State, State, int>> work;
  const Nfa& x;
  const Nfa& e;
  bool plus;

  TripleProduct(const Alphabet& al, const Nfa& x_, const Nfa& e_, bool p) : r(al), x(x_), e(e_), plus(p) {}

  State get(State p, State q, int flag) {
    std::uint64_t key = (static_cast<std::uint64_t>(p) * e.num_states() + q) * 2 + static_cast<std::uint64_t>(flag);
    auto [it, fresh] = id.emplace(key, 0);
    if (fresh) {
      it->second = r.add_state();
      r.set_final(it->second, x.is_final(p) && e.is_final(q) && (!plus || flag));
      work.emplace_back(p, q, flag);
    }
    return it->second;
  }

  void seed() {
    for (State p : x.initial_states())
      for (State q : e.initial_states()) r.set_initial(get(p, q, 0));
  }
};

}  // namespace

Nfa shuffle_language(const Nfa& x, std::string_view regex, bool plus) {
  const Nfa e = parse_trajectory(regex);
  const Alphabet& al = x.alphabet();
  TripleProduct tp(al, x, e, plus);
  tp.seed();
  while (!tp.work.empty()) {
    auto [p, q, f] = tp.work.back();
    tp.work.pop_back();
    State src = tp.id[(static_cast<std::uint64_t>(p) * e.num_states() + q) * 2 + static_cast<std::uint64_t>(f)];
    for (const auto& xe : x.edges(p)) {
      if (xe.label == kEpsilon) {
        tp.r.add_edge(src, kEpsilon, tp.get(xe.target, q, f));
        continue;
      }
      for (const auto& ee : e.edges(q))
        if (ee.label == 0) tp.r.add_edge(src, xe.label, tp.get(xe.target, ee.target, f));
    }
    for (const auto& ee : e.edges(q))
      if (ee.label == 1) {
        State tgt = tp.get(p, ee.target, 1);
        for (std::size_t a = 0; a < al.size(); ++a) tp.r.add_edge(src, static_cast<Symbol>(a), tgt);
      }
  }
  return trim(tp.r);
}

Nfa delete_language(const Nfa& x, std::string_view regex, bool plus) {
  const Nfa e = parse_trajectory(regex);
  const Alphabet& al = x.alphabet();
  TripleProduct tp(al, x, e, plus);
  tp.seed();
  while (!tp.work.empty()) {
    auto [p, q, f] = tp.work.back();
    tp.work.pop_back();
    State src = tp.id[(static_cast<std::uint64_t>(p) * e.num_states() + q) * 2 + static_cast<std::uint64_t>(f)];
    for (const auto& xe : x.edges(p)) {
      if (xe.label == kEpsilon) {
        tp.r.add_edge(src, kEpsilon, tp.get(xe.target, q, f));
        continue;
      }
      for (const auto& ee : e.edges(q)) {
        if (ee.label == 0)
          tp.r.add_edge(src, xe.label, tp.get(xe.target, ee.target, f));
        else
          tp.r.add_edge(src, kEpsilon, tp.get(xe.target, ee.target, 1));
      }
    }
  }
  return trim(tp.r);
}

Nfa bond_free_operator(const TrajectoryPair& p, const Nfa& l) {
  const Nfa nonempty = Nfa::nonempty(l.alphabet());
  if (p.strict) return shuffle_language(intersect(delete_language(l, p.e1, false), nonempty), p.e2, false);
  Nfa left = shuffle_language(intersect(delete_language(l, p.e1, true), nonempty), p.e2, false);
  Nfa right = shuffle_language(intersect(delete_language(l, p.e1, false), nonempty), p.e2, true);
  return unite(left, right);
}

}  // namespace dnacodec
