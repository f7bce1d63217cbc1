#include "dnacodec/property.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dnacodec/errors.hpp"

namespace dnacodec {

const char* to_string(PropertyKind k) { return k == PropertyKind::S ? "S" : "W"; }

const char* to_string(TransducerClass c) {
  switch (c) {
    case TransducerClass::unrestricted: return "unrestricted";
    case TransducerClass::theta_input_altering: return "altering";
    case TransducerClass::theta_input_preserving: return "preserving";
  }
  return "?";
}

const char* to_string(Decider d) {
  switch (d) {
    case Decider::satisfies_s: return "satisfies_S";
    case Decider::w_preserving: return "W_preserving";
    case Decider::w_general: return "W_general";
    case Decider::maximality: return "maximality";
  }
  return "?";
}

namespace {

Nfa aligned(const Nfa& l, const PropertyDescriptor& p) {
  if (l.alphabet() == p.alphabet()) return l;
  return l.rebased(p.alphabet());
}

void check_descriptor(const PropertyDescriptor& p) {
  if (!(p.transducer.alphabet() == p.theta.alphabet()))
    throw DomainError("transducer alphabet {" + p.transducer.alphabet().symbols() + "} differs from theta alphabet {" +
                      p.theta.alphabet().symbols() + "}");
}

void check_assertion(const PropertyDescriptor& p, const DeciderOptions& opt) {
  if (p.asserted_class == TransducerClass::unrestricted) return;
  ThetaMode mode = p.asserted_class == TransducerClass::theta_input_altering ? ThetaMode::altering
                                                                            : ThetaMode::preserving;
  if (auto w = bounded_counterexample(p.transducer, p.theta, mode, opt.assertion_bound, opt.execution))
    throw PreconditionError(std::string("asserted theta-input-") + to_string(p.asserted_class) +
                            " class is refuted by w = \"" + *w + "\"");
}

// (u, v) from a realized pair (x, y) of T restricted to L x theta(L).
WordPair as_violation(const PropertyDescriptor& p, const WordPair& xy) {
  return {xy.input, p.theta.inverse().apply(xy.output)};
}

Transducer restricted(const PropertyDescriptor& p, const Nfa& l) {
  return restrict_output(restrict_input(p.transducer, l), theta_image(l, p.theta));
}

Nfa pumped(const Alphabet& al, const Triple& t) {
  Nfa a(al);
  State s = a.add_state();
  a.set_initial(s);
  for (char c : t.x1) {
    State n = a.add_state();
    a.add_edge(s, c, n);
    s = n;
  }
  if (!t.x2.empty()) {
    State loop = s;
    for (std::size_t i = 0; i < t.x2.size(); ++i) {
      State n = (i + 1 == t.x2.size()) ? loop : a.add_state();
      a.add_edge(s, t.x2[i], n);
      s = n;
    }
  }
  for (char c : t.x3) {
    State n = a.add_state();
    a.add_edge(s, c, n);
    s = n;
  }
  a.set_final(s);
  return a;
}

bool pair_order(const WordPair& a, const WordPair& b) {
  if (a.input != b.input) return shortlex_less(a.input, b.input);
  return shortlex_less(a.output, b.output);
}

// Shortest realized pair (x, y) of a length-preserving s with y != theta(x).
// Only used when an inclusion witness happens to lie on the diagonal.

std::optional<WordPair> off_diagonal_pair(const Transducer& s, const Permutation& theta) {
  for (std::size_t total = 2;; total *= 2) {
    auto pairs = enumerate_pairs(s, total);
    std::optional<WordPair> best;
    for (const auto& pr : pairs)
      if (theta.apply(pr.input) != pr.output) {
        if (!best || pr.input.size() < best->input.size()) best = pr;
      }
    if (best) return best;
    if (total > 4096) return std::nullopt;
  }
}

}  // namespace

bool is_violation(const PropertyDescriptor& p, const Nfa& l0, const WordPair& uv) {
  Nfa l = aligned(l0, p);
  if (!l.accepts(uv.input) || !l.accepts(uv.output)) return false;
  if (p.kind == PropertyKind::W && uv.input == uv.output) return false;
  return realizes(p.transducer, uv.input, p.theta.apply(uv.output));
}

Verdict satisfies_s(const PropertyDescriptor& p, const Nfa& l0, const DeciderOptions&) {
  check_descriptor(p);
  Nfa l = aligned(l0, p);
  Verdict v;
  v.decider = Decider::satisfies_s;
  Nfa tl = image(p.transducer, l);
  Nfa both = intersect(theta_image(l, p.theta), tl);
  v.stats["image_states"] = tl.num_states();
  v.stats["intersection_states"] = both.num_states();
  auto y = shortest_word(both);
  if (!y) {
    v.satisfied = true;
    return v;
  }
  auto uy = find_pair(restrict_output(restrict_input(p.transducer, l), Nfa::word(p.alphabet(), *y)));
  if (!uy) throw std::logic_error("satisfies_S: no preimage for a word of T(L)");
  v.witness = as_violation(p, *uy);
  return v;
}

Verdict satisfies_w_preserving(const PropertyDescriptor& p, const Nfa& l0, const DeciderOptions& opt) {
  check_descriptor(p);
  if (p.asserted_class != TransducerClass::theta_input_preserving)
    throw PreconditionError("W_preserving needs a transducer asserted theta-input-preserving");
  check_assertion(p, opt);
  Nfa l = aligned(l0, p);
  Verdict v;
  v.decider = Decider::w_preserving;
  Transducer s = normalize(restricted(p, l));
  v.stats["relation_states"] = s.num_states();
  // The class says nothing about the empty word, so handle it separately.
  if (l.accepts("")) {
    auto e = find_pair(restrict_output(restrict_input(s, Nfa::epsilon(p.alphabet())), Nfa::nonempty(p.alphabet())));
    if (e) {
      v.witness = as_violation(p, *e);
      return v;
    }
  }
  if (auto f = functionality_counterexample(s)) {
    const Word& y = f->output1 != p.theta.apply(f->input) ? f->output1 : f->output2;
    v.witness = as_violation(p, {f->input, y});
    return v;
  }
  v.satisfied = true;
  return v;
}

std::vector<Triple> pumping_triples(const Transducer& s0, std::size_t cap) {
  const Transducer s = normalize(s0);
  const std::size_t bound = s.num_states();
  std::vector<Triple> out;
  if (bound == 0) return out;
  const Nfa d = remove_epsilon(domain(s));
  const Alphabet& al = d.alphabet();
  const std::size_t k = al.size();
  using Set = std::vector<State>;
  auto step = [&](const Set& from, Symbol a) {
    Set r;
    for (State q : from)
      for (const auto& e : d.edges(q))
        if (e.label == a) r.push_back(e.target);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
  };
  auto run = [&](Set from, const Word& w) {
    for (char c : w) {
      if (from.empty()) break;
      from = step(from, al.index_of(c));
    }
    return from;
  };
  auto accepting = [&](const Set& q) { return std::any_of(q.begin(), q.end(), [&](State x) { return d.is_final(x); }); };
  auto merge = [](Set a, const Set& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  };

  std::set<std::pair<Word, Word>> seen;
  auto add = [&](const Word& x1, const Word& x2, const Word& x3) {
    // x1 x2* x3 is determined by its two shortest words.
    if (!seen.insert({x1 + x3, x1 + x2 + x3}).second) return;
    if (out.size() >= cap) throw ResourceError("triple enumeration exceeded the cap (" + std::to_string(cap) + ")");
    out.push_back({x1, x2, x3});
  };

  std::function<void(const Word&, const Word&, const Word&, const Set&)> grow_x3 =
      [&](const Word& x1, const Word& x2, const Word& x3, const Set& q) {
        if (accepting(q)) add(x1, x2, x3);
        if (x1.size() + x2.size() + x3.size() >= bound) return;
        for (std::size_t a = 0; a < k; ++a) {
          Set n = step(q, static_cast<Symbol>(a));
          if (!n.empty()) grow_x3(x1, x2, x3 + al.symbol(static_cast<Symbol>(a)), n);
        }
      };

  std::function<void(const Word&, const Set&, const Word&, const Set&)> grow_x2 =
      [&](const Word& x1, const Set& p1, const Word& x2, const Set& p) {
        if (x1.size() + x2.size() >= bound) return;
        for (std::size_t a = 0; a < k; ++a) {
          Set n = step(p, static_cast<Symbol>(a));
          if (n.empty()) continue;
          Word x2a = x2 + al.symbol(static_cast<Symbol>(a));
          // Union of the sets reached by x1 x2a^i, i >= 1.
          Set acc = n, cur = n;
          std::set<Set> visited{cur};
          for (;;) {
            cur = run(cur, x2a);
            if (cur.empty() || !visited.insert(cur).second) break;
            acc = merge(acc, cur);
          }
          grow_x3(x1, x2a, Word{}, acc);
          grow_x2(x1, p1, x2a, n);
        }
      };

  std::function<void(const Word&, const Set&)> grow_x1 = [&](const Word& x1, const Set& p1) {
    if (accepting(p1)) add(x1, Word{}, Word{});
    grow_x2(x1, p1, Word{}, p1);
    if (x1.size() >= bound) return;
    for (std::size_t a = 0; a < k; ++a) {
      Set n = step(p1, static_cast<Symbol>(a));
      if (!n.empty()) grow_x1(x1 + al.symbol(static_cast<Symbol>(a)), n);
    }
  };

  Set start = d.initial_states();
  if (!start.empty()) grow_x1(Word{}, start);
  return out;
}

Verdict satisfies_w_general(const PropertyDescriptor& p, const Nfa& l0, const DeciderOptions& opt) {
  check_descriptor(p);
  if (p.theta.antimorphic() && !p.theta.is_involution())
    throw PreconditionError("W_general needs theta to be an antimorphic involution or a morphic permutation");
  Nfa l = aligned(l0, p);
  Verdict v;
  v.decider = Decider::w_general;
  Transducer s = normalize(restricted(p, l));
  v.stats["relation_states"] = s.num_states();
  if (relation_empty(s)) {
    v.satisfied = true;
    return v;
  }
  if (!p.theta.antimorphic()) {
    // For a morphic theta the condition is that theta^-1 applied to the
    // outputs gives a partial identity.
    if (auto w = partial_identity_counterexample(relabel_output(s, p.theta.inverse()))) {
      v.witness = WordPair{w->input, w->output};
      return v;
    }
    v.satisfied = true;
    return v;
  }
  if (auto w = length_counterexample(s)) {
    v.witness = as_violation(p, *w);
    return v;
  }
  if (opt.refute_total > 0) {
    std::optional<WordPair> best;
    for (const auto& pr : enumerate_pairs(s, opt.refute_total))
      if (p.theta.apply(pr.input) != pr.output && (!best || pair_order(pr, *best))) best = pr;
    if (best) {
      v.stats["refuted_early"] = 1;
      v.witness = as_violation(p, *best);
      return v;
    }
  }
  auto triples = pumping_triples(s, opt.triple_cap);
  v.stats["triples"] = triples.size();
  std::vector<RecognizablePart> parts;
  parts.reserve(triples.size());
  for (const auto& t : triples) {
    Nfa a = pumped(p.alphabet(), t);
    Nfa b = theta_image(a, p.theta);
    parts.push_back({std::move(a), std::move(b)});
  }
  InclusionLimits lim{opt.state_cap, opt.atom_cap};
  auto ce = recognizable_inclusion_counterexample(s, parts, lim);
  if (!ce) {
    v.satisfied = true;
    return v;
  }
  if (ce->output == p.theta.apply(ce->input)) {
    ce = off_diagonal_pair(s, p.theta);
    if (!ce) throw std::logic_error("W_general: inclusion failed but no off-diagonal pair was found");
  }
  v.witness = as_violation(p, *ce);
  return v;
}

Verdict satisfies(const PropertyDescriptor& p, const Nfa& l, const DeciderOptions& opt) {
  if (p.kind == PropertyKind::S) return satisfies_s(p, l, opt);
  if (p.asserted_class == TransducerClass::theta_input_preserving) return satisfies_w_preserving(p, l, opt);
  return satisfies_w_general(p, l, opt);
}

namespace {

// L + theta^-1(T(L)) + T^-1(theta(L)): the words that cannot be added.
Nfa blocked_words(const PropertyDescriptor& p, const Nfa& l) {
  Nfa a = theta_image(image(p.transducer, l), p.theta.inverse());
  Nfa b = image(inverse(p.transducer), theta_image(l, p.theta));
  Nfa r = unite(l, unite(a, b));
  // The altering assertion says nothing about the empty word.
  if (p.kind == PropertyKind::S && realizes(p.transducer, "", "")) r = unite(r, Nfa::epsilon(p.alphabet()));
  return r;
}

void check_maximality_preconditions(const PropertyDescriptor& p, const Nfa& l, const DeciderOptions& opt) {
  if (p.kind == PropertyKind::S) {
    if (p.asserted_class != TransducerClass::theta_input_altering)
      throw PreconditionError(
          "maximality for an S-kind property is only decidable here for a theta-input-altering transducer");
  }
  check_assertion(p, opt);
  Verdict v = satisfies(p, l, opt);
  if (!v.satisfied) {
    std::string w = v.witness ? " (violation u=\"" + v.witness->input + "\", v=\"" + v.witness->output + "\")" : "";
    throw PreconditionError("the language does not satisfy the property" + w);
  }
}

}  // namespace

Verdict is_maximal(const PropertyDescriptor& p, const Nfa& l0, const DeciderOptions& opt) {
  check_descriptor(p);
  Nfa l = aligned(l0, p);
  check_maximality_preconditions(p, l, opt);
  Verdict v;
  v.decider = Decider::maximality;
  Nfa blocked = blocked_words(p, l);
  v.stats["blocked_states"] = blocked.num_states();
  v.extension = missing_word(blocked, opt.state_cap);
  v.satisfied = !v.extension.has_value();
  return v;
}

std::optional<Word> find_extension(const PropertyDescriptor& p, const Nfa& l0, std::size_t max_len,
                                   const DeciderOptions& opt) {
  Verdict v = is_maximal(p, l0, opt);
  if (v.extension && v.extension->size() <= max_len) return v.extension;
  return std::nullopt;
}

PropertyDescriptor compile_trajectory_property(const TrajectoryPair& tp, const Permutation& theta) {
  if (!theta.is_antimorphic_involution())
    throw PreconditionError("bond-free properties need theta to be an antimorphic involution");
  const Alphabet& al = theta.alphabet();
  const Nfa nonempty = Nfa::nonempty(al);
  Transducer t(al);
  if (tp.strict) {
    t = compose(trajectory_transducer(TrajectoryOp::shuffle_star, tp.e2, al),
                restrict_output(trajectory_transducer(TrajectoryOp::delete_star, tp.e1, al), nonempty));
  } else {
    Transducer left = compose(trajectory_transducer(TrajectoryOp::shuffle_star, tp.e2, al),
                              restrict_output(trajectory_transducer(TrajectoryOp::delete_plus, tp.e1, al), nonempty));
    Transducer right = compose(trajectory_transducer(TrajectoryOp::shuffle_plus, tp.e2, al),
                               restrict_output(trajectory_transducer(TrajectoryOp::delete_star, tp.e1, al), nonempty));
    t = unite(left, right);
  }
  PropertyDescriptor d{t, theta, PropertyKind::S, TransducerClass::unrestricted,
                       "bond-free(" + tp.e1 + ", " + tp.e2 + (tp.strict ? ", strict)" : ")")};
  return d;
}

}  // namespace dnacodec
