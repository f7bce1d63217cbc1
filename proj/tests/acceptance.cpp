// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status is
// the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "dnacodec/dna.hpp"
#include "dnacodec/io.hpp"
#include "dnacodec/pcp.hpp"
#include "dnacodec/property.hpp"
#include "dnacodec/regex.hpp"
#include "dnacodec/trajectory.hpp"
#include "machines.hpp"
#include "oracle.hpp"

using namespace dnacodec;

namespace {

const Alphabet kBin("01");
const Alphabet kDna = Alphabet::dna();
const Permutation kDelta = Permutation::dna_involution();
const Permutation kMirror = Permutation::mirror(kBin);

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
};

std::string show(const oracle::Lang& l) {
  std::string s = "{";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + (l[i].empty() ? std::string("e") : l[i]);
  return s + "}";
}

Nfa finite(const Alphabet& al, const oracle::Lang& l) { return Nfa::words(al, l); }

PropertyDescriptor desc(Transducer t, Permutation th, PropertyKind k,
                        TransducerClass c = TransducerClass::unrestricted) {
  return PropertyDescriptor{std::move(t), std::move(th), k, c, ""};
}

// ---------------------------------------------------------------- 1

Tally worked_examples() {
  Tally t;
  PropertyDescriptor h = hamming_property(false);
  t.check(!satisfies(h, finite(kDna, {"AGG", "CCA"})).satisfied, "H on {AGG,CCA} should fail");
  t.check(satisfies(h, finite(kDna, {"AAA", "CCT"})).satisfied, "H on {AAA,CCT} should hold");
  t.check(!satisfies(dna_property("nonoverlapping", DnaVariant::strict), finite(kDna, {"AT"})).satisfied,
          "{AT} should fail nonoverlapping");
  t.check(!satisfies(h, finite(kDna, {"A", "C"})).satisfied, "H on {A,C} should fail");

  oracle::Lang tf = {"ACGT", "CCAC", "GTAA"};
  t.check(!oracle::theta_free(tf, kDelta), "{ACGT,CCAC,GTAA} should not be theta-free");
  for (const auto& sub : oracle::subsets(tf, 2))
    t.check(oracle::theta_free(sub, kDelta), "subset " + show(sub) + " should be theta-free");

  Transducer c = parse_fado_transducer(
      "@Transducer 2 * 0\n0 a @epsilon 0\n0 b @epsilon 0\n0 a a 1\n0 b b 1\n1 a a 1\n1 b b 1\n"
      "1 @epsilon @epsilon 2\n2 a @epsilon 2\n2 b @epsilon 2\n");
  auto img = enumerate(image(c, Nfa::word(c.alphabet(), "ab")), 4);
  t.check(img == std::vector<Word>{"a", "b", "ab"}, "FAdo example image on {ab}");
  return t;
}

// ---------------------------------------------------------------- 2

Tally trajectory_equivalence() {
  Tally t;
  std::vector<TrajectoryPair> pairs = {{"1*0+1*", "0+", true}, {"1*0+1*", "0+", false}, {"0+", "0+", true}};
  auto pool = oracle::all_words("ACGT", 3);
  auto langs = oracle::subsets(pool, 2);
  for (const auto& p : pairs) {
    PropertyDescriptor d = compile_trajectory_property(p, kDelta);
    oracle::Traj e1(p.e1), e2(p.e2);
    for (const auto& l : langs) {
      bool got = satisfies_s(d, finite(kDna, l)).satisfied;
      bool want = oracle::bond_free(l, e1, e2, p.strict, kDelta);
      t.check(got == want, [&] { return p.e1 + "/" + p.e2 + " on " + show(l); });
    }
  }
  return t;
}

// ---------------------------------------------------------------- 3

struct Machine {
  std::string name;
  Transducer t;
  Permutation theta;
};

Transducer seeded(std::uint64_t seed, const Alphabet& al, std::size_t states, std::size_t edges) {
  std::mt19937_64 rng(seed);
  return oracle::random_transducer(rng, al, states, edges);
}

std::vector<Machine> w_fixtures() {
  std::vector<Machine> m;
  m.push_back({"bin identity", Transducer::identity(kBin), kMirror});
  m.push_back({"bin substitution", machines::substitution(kBin), kMirror});
  m.push_back({"bin prefix", machines::prefix(kBin), kMirror});
  m.push_back({"bin delete-one", machines::delete_one(kBin), kMirror});
  m.push_back({"bin universal", machines::universal(kBin), kMirror});
  m.push_back({"bin doubler", machines::doubler(kBin), kMirror});
  m.push_back({"bin random 3x6", seeded(101, kBin, 3, 6), kMirror});
  m.push_back({"bin random 2x5 id", seeded(102, kBin, 2, 5), Permutation::identity(kBin)});
  m.push_back({"dna H", hamming_property(false).transducer, kDelta});
  m.push_back({"dna identity", Transducer::identity(kDna), kDelta});
  m.push_back({"dna prefix", machines::prefix(kDna), kDelta});
  m.push_back({"dna random 3x8", seeded(103, kDna, 3, 8), kDelta});
  return m;
}

Tally w_general_oracle(std::size_t& machine_count) {
  Tally t;
  auto fixtures = w_fixtures();
  machine_count = fixtures.size();
  for (const auto& m : fixtures) {
    if (m.t.num_states() > 3) t.check(false, m.name + " has more than 3 states");
    const Alphabet& al = m.t.alphabet();
    auto pool = oracle::all_words(al.symbols(), 3);
    PropertyDescriptor p = desc(m.t, m.theta, PropertyKind::W);
    for (const auto& l : oracle::subsets(pool, 3)) {
      bool got = satisfies_w_general(p, finite(al, l)).satisfied;
      bool want = !oracle::w_violation(m.t, m.theta, l);
      t.check(got == want, [&] { return m.name + " on " + show(l); });
    }
  }
  return t;
}

// ---------------------------------------------------------------- 4

// Shortlex-first w over the alphabet, |w| <= n, w not in l, with l + {w}
// still satisfying the property (checked by definition).
std::optional<Word> brute_extension(const PropertyDescriptor& p, const oracle::Lang& l, std::size_t n) {
  for (const auto& w : oracle::all_words(p.alphabet().symbols(), n)) {
    if (std::find(l.begin(), l.end(), w) != l.end()) continue;
    oracle::Lang lw = l;
    lw.push_back(w);
    bool bad = p.kind == PropertyKind::S ? oracle::s_violation(p.transducer, p.theta, lw).has_value()
                                         : oracle::w_violation(p.transducer, p.theta, lw).has_value();
    if (!bad) return w;
  }
  return std::nullopt;
}

Tally maximality_oracle(std::size_t& fixture_count) {
  Tally t;
  struct Fixture {
    std::string name;
    PropertyDescriptor p;
    oracle::Lang l;
  };
  std::vector<Fixture> fx;
  auto d2 = oracle::words_of("ACGT", 2);
  oracle::Lang e_d2 = d2;
  e_d2.insert(e_d2.begin(), "");
  fx.push_back({"compliant normal, Delta^2", dna_property("compliant", DnaVariant::normal), d2});
  fx.push_back({"compliant normal, {e} + Delta^2", dna_property("compliant", DnaVariant::normal), e_d2});
  fx.push_back({"compliant normal, {ACG}", dna_property("compliant", DnaVariant::normal), {"ACG"}});
  fx.push_back({"p-compliant normal, {AC,GA}", dna_property("p-compliant", DnaVariant::normal), {"AC", "GA"}});
  fx.push_back({"W universal, {A}", desc(machines::universal(kDna), kDelta, PropertyKind::W), {"A"}});
  PropertyDescriptor hw = hamming_property(false);
  hw.kind = PropertyKind::W;
  fx.push_back({"W H, {AAA,CCT}", hw, {"AAA", "CCT"}});
  fx.push_back({"W identity, {AC}", desc(Transducer::identity(kDna), kDelta, PropertyKind::W), {"AC"}});
  fx.push_back({"S empty, {}",
                desc(Transducer::empty(kDna), kDelta, PropertyKind::S, TransducerClass::theta_input_altering),
                {}});
  fx.push_back({"compliant weak, {AAC}", dna_property("compliant", DnaVariant::weak), {"AAC"}});
  fixture_count = fx.size();

  for (const auto& f : fx) {
    Verdict v;
    try {
      v = is_maximal(f.p, finite(kDna, f.l));
    } catch (const std::exception& e) {
      t.check(false, f.name + ": " + e.what());
      continue;
    }
    auto bf = brute_extension(f.p, f.l, 4);
    bool agree = v.satisfied ? !bf.has_value()
                             : (v.extension->size() <= 4 ? bf == v.extension : !bf.has_value());
    t.check(agree, [&] {
      return f.name + ": decider " + (v.extension ? "ext '" + *v.extension + "'" : "maximal") + ", search " +
             (bf ? "ext '" + *bf + "'" : "none");
    });
  }

  // Empty transducer: maximal exactly when L is universal.
  PropertyDescriptor empty_s =
      desc(Transducer::empty(kDna), kDelta, PropertyKind::S, TransducerClass::theta_input_altering);
  PropertyDescriptor empty_w = desc(Transducer::empty(kDna), kDelta, PropertyKind::W);
  for (const char* re : {"(A|C|G|T)*", "(A|C|G|T)+", "(A|C|G)*", "@epsilon|(A|C|G|T)(A|C|G|T)*",
                         "(A|C|G|T)*A(A|C|G|T)*|(C|G|T)*", "(AC)*", "@empty_set"}) {
    Nfa l = parse_regex(re, kDna);
    for (const auto* p : {&empty_s, &empty_w}) {
      Verdict v = is_maximal(*p, l);
      t.check(v.satisfied == is_universal(l) && v.extension == missing_word(l),
              std::string("empty transducer on ") + re);
    }
  }
  return t;
}

// ---------------------------------------------------------------- 5

Tally pcp_pipeline() {
  Tally t;
  PcpInstance p(kBin, {"0", "01"}, {"00", "1"});
  auto s = solve_bounded(p, 3);
  t.check(s == Sequence{0, 1}, "solve at bound 3");
  Permutation three = Permutation::from_images(Alphabet("012"), "102", Extension::antimorphic);
  for (const Permutation* th : {&kMirror, static_cast<const Permutation*>(&three)}) {
    ThetaPcpInstance r = reduce_to_theta_pcp(p, *th);
    t.check(solve_bounded(r, 6).has_value(), "reduced instance solves at bound 6 over " + th->alphabet().symbols());
    Sequence m = map_solution(p, Sequence{0, 1});
    t.check(check_solution(r, m).solved, "mapped solution validates over " + th->alphabet().symbols());
  }
  PreservingReduction pr = pcp_to_preserving_transducer(p, kMirror);
  auto w = bounded_counterexample(pr.transducer, kMirror, ThetaMode::preserving, 10);
  t.check(w.has_value(), "preserving counterexample for the solvable instance");
  PreservingReduction none = pcp_to_preserving_transducer(PcpInstance(kBin, {"0"}, {"1"}), kMirror);
  t.check(!bounded_counterexample(none.transducer, kMirror, ThetaMode::preserving, 12).has_value(),
          "no preserving counterexample up to 12 for the unsolvable instance");
  return t;
}

// ---------------------------------------------------------------- 6

Permutation random_involution(std::mt19937_64& rng, const Alphabet& al) {
  std::string syms = al.symbols();
  std::shuffle(syms.begin(), syms.end(), rng);
  std::string img = al.symbols();
  for (std::size_t i = 0; i + 1 < syms.size(); i += 2) {
    if (rng() % 3 == 0) continue;
    img[al.index_of(syms[i])] = syms[i + 1];
    img[al.index_of(syms[i + 1])] = syms[i];
  }
  return Permutation::from_images(al, img, rng() % 2 ? Extension::antimorphic : Extension::morphic);
}

Tally property_suites() {
  Tally t;
  std::mt19937_64 rng(20240601);

  // S implies W, with both deciders checked against the definitions.
  for (int i = 0; i < 1500; ++i) {
    const Alphabet& al = i % 2 ? kDna : kBin;
    Permutation th = i % 2 ? kDelta : kMirror;
    Transducer tr = oracle::random_transducer(rng, al, 1 + i % 3, 2 + i % 6);
    auto l = oracle::random_language(rng, al, 3, 3);
    bool s = satisfies_s(desc(tr, th, PropertyKind::S), finite(al, l)).satisfied;
    bool w = satisfies_w_general(desc(tr, th, PropertyKind::W), finite(al, l)).satisfied;
    t.check(!s || w, [&] { return "S without W on " + show(l); });
    t.check(s == !oracle::s_violation(tr, th, l), [&] { return "S oracle on " + show(l); });
    t.check(w == !oracle::w_violation(tr, th, l), [&] { return "W oracle on " + show(l); });
  }

  // DNA variant chain and hierarchy edges.
  std::vector<std::string> names;
  for (const auto& n : dna_property_names())
    if (n != "nonoverlapping") names.push_back(n);
  std::map<std::pair<std::string, int>, PropertyDescriptor> built;
  const DnaVariant vs[] = {DnaVariant::strict, DnaVariant::normal, DnaVariant::weak};
  for (const auto& n : dna_property_names())
    for (int k = 0; k < 3; ++k)
      if (n != "nonoverlapping" || k == 0) built.emplace(std::make_pair(n, k), dna_property(n, vs[k]));
  for (int i = 0; i < 150; ++i) {
    auto l = oracle::random_language(rng, kDna, 3, 3);
    Nfa ln = finite(kDna, l);
    std::map<std::pair<std::string, int>, bool> ok;
    for (const auto& [key, p] : built) ok[key] = satisfies(p, ln).satisfied;
    for (const auto& n : names) {
      t.check(!ok[{n, 0}] || ok[{n, 1}], [&] { return n + " strict without normal on " + show(l); });
      t.check(!ok[{n, 1}] || ok[{n, 2}], [&] { return n + " normal without weak on " + show(l); });
    }
    for (int k = 0; k < 3; ++k)
      for (const auto& [a, b] : dna_hierarchy(vs[k]))
        t.check(!ok[{a, k}] || ok[{b, k}], [&] { return a + " -> " + b + " on " + show(l); });
  }

  // Shuffle and deletion on trajectories are dual.
  for (int i = 0; i < 3000; ++i) {
    Word x;
    std::uniform_int_distribution<int> len(0, 4);
    int nx = len(rng), nw = len(rng);
    for (int j = 0; j < nx; ++j) x.push_back("ab"[rng() % 2]);
    Word w;
    for (int j = 0; j < nw; ++j) w.push_back("ab"[rng() % 2]);
    std::string tr;
    int zeros = 0, ones = 0;
    while (zeros < nx || ones < nw) {
      bool zero = ones == nw || (zeros < nx && rng() % 2);
      tr.push_back(zero ? '0' : '1');
      (zero ? zeros : ones)++;
    }
    auto y = shuffle_on_trajectory(x, tr, w);
    t.check(y.has_value() && delete_on_trajectory(*y, tr, w) == x, "shuffle/delete duality for " + x + "," + tr);
  }

  // Inverse transducer swaps the relation.
  for (int i = 0; i < 1500; ++i) {
    Transducer tr = oracle::random_transducer(rng, kBin, 1 + i % 3, 2 + i % 5);
    Transducer inv = inverse(tr);
    Word x, y;
    for (int j = rng() % 4; j > 0; --j) x.push_back("01"[rng() % 2]);
    for (int j = rng() % 4; j > 0; --j) y.push_back("01"[rng() % 2]);
    t.check(oracle::realizes(tr, x, y) == oracle::realizes(inv, y, x), "inverse duality on " + x + "," + y);
    t.check(realizes(tr, x, y) == oracle::realizes(tr, x, y), "library membership on " + x + "," + y);
  }

  // theta^2 = id for involutions; theta^-1 undoes theta for any permutation.
  for (int i = 0; i < 2000; ++i) {
    const Alphabet& al = i % 2 ? kDna : Alphabet("abcde");
    Permutation th = random_involution(rng, al);
    Word w;
    for (int j = rng() % 6; j > 0; --j) w.push_back(al.symbols()[rng() % al.size()]);
    t.check(th.apply(th.apply(w)) == w, "theta^2 on " + w);
    t.check(th.inverse().apply(th.apply(w)) == w, "inverse on " + w);
    t.check(th.is_involution(), "involution flag");
  }

  // Automata invariants: complement, theta image, and the witness re-check.
  for (int i = 0; i < 1000; ++i) {
    auto l = oracle::random_language(rng, kDna, 3, 3);
    Nfa ln = finite(kDna, l);
    Nfa c = complement(ln);
    Nfa im = theta_image(ln, kDelta);
    for (const auto& w : l) {
      t.check(!c.accepts(w), "complement keeps " + w);
      t.check(im.accepts(oracle::apply(kDelta, w)), "theta image misses " + w);
    }
    PropertyDescriptor h = hamming_property(i % 2);
    Verdict v = satisfies_s(h, ln);
    if (v.witness) t.check(is_violation(h, ln, *v.witness), "H witness re-check on " + show(l));
  }
  return t;
}

// ---------------------------------------------------------------- 7

Tally complexity_smoke(double& seconds, std::size_t& size) {
  Tally t;
  std::mt19937_64 rng(77);
  // |T| edges times |A|^2 for an automaton A with ~100 states.
  Transducer tr = oracle::random_transducer(rng, kDna, 40, 100);
  Nfa a(kDna);
  a.add_states(100);
  a.set_initial(0);
  std::uniform_int_distribution<std::size_t> st(0, 99), sym(0, 3);
  for (State s = 0; s < 100; ++s) {
    if (s % 7 == 0) a.set_final(s);
    for (int k = 0; k < 3; ++k) a.add_edge(s, static_cast<Symbol>(sym(rng)), st(rng));
  }
  size = tr.edges().size() * a.num_states() * a.num_states();
  auto t0 = std::chrono::steady_clock::now();
  Verdict v = satisfies_s(desc(tr, kDelta, PropertyKind::S), a);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (v.witness) t.check(is_violation(desc(tr, kDelta, PropertyKind::S), a, *v.witness), "witness re-check");
  t.check(seconds < 10.0, "satisfies_S took " + std::to_string(seconds) + " s");
  return t;
}

int report(int n, const std::string& what, const Tally& t, double secs, double limit) {
  bool pass = t.failures == 0 && (limit <= 0 || secs < limit);
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " (" << t.cases << " cases, "
     << t.failures << " failures, " << secs << " s";
  if (limit > 0) os << ", limit " << limit << " s";
  os << ")";
  if (t.failures) os << " first: " << t.first;
  if (limit > 0 && secs >= limit) os << " over time limit";
  std::puts(os.str().c_str());
  std::fflush(stdout);
  return pass ? 0 : 1;
}

template <class F>
std::pair<Tally, double> timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  Tally t = f();
  return {t, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

}  // namespace

int main() {
  int failed = 0;
  {
    auto [t, s] = timed(worked_examples);
    failed += report(1, "worked examples", t, s, 1.0);
  }
  {
    auto [t, s] = timed(trajectory_equivalence);
    failed += report(2, "trajectory pairs vs bond-free operator on all |L|<=2, words<=3", t, s, 300.0);
  }
  {
    std::size_t machines = 0;
    auto [t, s] = timed([&] { return w_general_oracle(machines); });
    if (machines < 10) t.check(false, "fewer than 10 machines");
    failed += report(3, "W_general vs definition, " + std::to_string(machines) + " machines, all |L|<=3", t, s, 0);
  }
  {
    std::size_t fixtures = 0;
    auto [t, s] = timed([&] { return maximality_oracle(fixtures); });
    if (fixtures < 5) t.check(false, "fewer than 5 fixtures");
    failed += report(4, "maximality vs extension search, " + std::to_string(fixtures) + " fixtures", t, s, 0);
  }
  {
    auto [t, s] = timed(pcp_pipeline);
    failed += report(5, "PCP pipeline", t, s, 120.0);
  }
  {
    auto [t, s] = timed(property_suites);
    if (t.cases < 10000) t.check(false, "fewer than 10^4 cases");
    failed += report(6, "randomized property suites", t, s, 0);
  }
  {
    double secs = 0;
    std::size_t size = 0;
    auto [t, s] = timed([&] { return complexity_smoke(secs, size); });
    failed += report(7, "satisfies_S smoke, |T||A|^2 = " + std::to_string(size), t, secs, 10.0);
  }
  return failed;
}
