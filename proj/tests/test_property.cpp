#include <catch_amalgamated.hpp>
#include <random>

#include "dnacodec/dna.hpp"
#include "dnacodec/errors.hpp"
#include "dnacodec/pcp.hpp"
#include "dnacodec/property.hpp"
#include "dnacodec/regex.hpp"
#include "machines.hpp"
#include "oracle.hpp"

using namespace dnacodec;

namespace {

const Alphabet kBin("01");
const Alphabet kDna = Alphabet::dna();
const Permutation kDelta = Permutation::dna_involution();

Nfa words(const Alphabet& al, std::vector<Word> ws) { return Nfa::words(al, ws); }

PropertyDescriptor desc(Transducer t, Permutation th, PropertyKind k,
                        TransducerClass c = TransducerClass::unrestricted) {
  return PropertyDescriptor{std::move(t), std::move(th), k, c, ""};
}

PropertyDescriptor h_prop(PropertyKind k) {
  PropertyDescriptor p = hamming_property(false);
  p.kind = k;
  return p;
}

}  // namespace

TEST_CASE("satisfies_S examples") {
  PropertyDescriptor h = h_prop(PropertyKind::S);
  Verdict v = satisfies_s(h, words(kDna, {"AGG", "CCA"}));
  CHECK_FALSE(v.satisfied);
  REQUIRE(v.witness);
  CHECK(is_violation(h, words(kDna, {"AGG", "CCA"}), *v.witness));
  CHECK(satisfies_s(h, words(kDna, {"AAA", "CCT"})).satisfied);

  PropertyDescriptor no = desc(Transducer::identity(kDna), kDelta, PropertyKind::S);
  Verdict at = satisfies_s(no, words(kDna, {"AT"}));
  CHECK_FALSE(at.satisfied);
  CHECK(at.witness == WordPair{"AT", "AT"});
  CHECK(satisfies_s(no, words(kDna, {"AC"})).satisfied);
  CHECK(satisfies_s(no, Nfa::empty(kDna)).satisfied);
  CHECK(satisfies_s(h, words(kDna, {"A", "C"})).satisfied == false);
}

TEST_CASE("W_preserving examples") {
  // theta = id with the substitution channel: classic 1-substitution error detection.
  Permutation id = Permutation::identity(kBin);
  PropertyDescriptor sd =
      desc(machines::substitution(kBin), id, PropertyKind::W, TransducerClass::theta_input_preserving);
  CHECK(satisfies_w_preserving(sd, words(kBin, {"00", "11"})).satisfied);
  Verdict bad = satisfies_w_preserving(sd, words(kBin, {"00", "01"}));
  CHECK_FALSE(bad.satisfied);
  REQUIRE(bad.witness);
  CHECK(is_violation(sd, words(kBin, {"00", "01"}), *bad.witness));

  // A preserving machine from the PCP reduction of an unsolvable instance.
  Permutation mirror = Permutation::mirror(kBin);
  PcpInstance none(kBin, {"0"}, {"1"});
  PropertyDescriptor ta = desc(pcp_to_preserving_transducer(none, mirror).transducer, mirror, PropertyKind::W,
                               TransducerClass::theta_input_preserving);
  CHECK(satisfies_w_preserving(ta, words(kBin, {"0"})).satisfied);
  CHECK(satisfies_w_preserving(ta, Nfa::empty(kBin)).satisfied);
  Verdict two = satisfies_w_preserving(ta, words(kBin, {"0", "1"}));
  CHECK(two.satisfied == !oracle::w_violation(ta.transducer, mirror, {"0", "1"}));

  // A refuted assertion is an error.
  PropertyDescriptor wrong =
      desc(Transducer::identity(kDna), kDelta, PropertyKind::W, TransducerClass::theta_input_preserving);
  CHECK_THROWS_AS(satisfies_w_preserving(wrong, words(kDna, {"A"})), PreconditionError);
  CHECK_THROWS_AS(satisfies_w_preserving(h_prop(PropertyKind::W), words(kDna, {"A"})), PreconditionError);
}

TEST_CASE("W_general examples") {
  PropertyDescriptor h = h_prop(PropertyKind::W);
  for (const auto& w : std::vector<Word>{"", "A", "AT", "ACGT"}) CHECK(satisfies_w_general(h, words(kDna, {w})).satisfied);
  Verdict v = satisfies_w_general(h, words(kDna, {"AGG", "CCA"}));
  CHECK_FALSE(v.satisfied);
  REQUIRE(v.witness);
  CHECK(is_violation(h, words(kDna, {"AGG", "CCA"}), *v.witness));
  CHECK(satisfies_w_general(h, Nfa::empty(kDna)).satisfied);
  CHECK(satisfies_w_general(h, words(kDna, {"AAA", "CCT"})).satisfied);

  // Infinite languages.
  PropertyDescriptor no = desc(Transducer::identity(kDna), kDelta, PropertyKind::W);
  CHECK(satisfies_w_general(no, parse_regex("A*", kDna)).satisfied);
  CHECK_FALSE(satisfies_w_general(no, parse_regex("A*|T", kDna)).satisfied);
  CHECK(satisfies_w_general(no, parse_regex("(AT)*", kDna)).satisfied);

  Permutation cyc = Permutation::from_images(Alphabet("012"), "120", Extension::antimorphic);
  CHECK_THROWS_AS(satisfies_w_general(desc(Transducer::identity(Alphabet("012")), cyc, PropertyKind::W),
                                      words(Alphabet("012"), {"0"})),
                  PreconditionError);
}

TEST_CASE("dispatch records the decider") {
  CHECK(satisfies(h_prop(PropertyKind::S), words(kDna, {"A"})).decider == Decider::satisfies_s);
  CHECK(satisfies(h_prop(PropertyKind::W), words(kDna, {"A"})).decider == Decider::w_general);
  PropertyDescriptor sd = desc(machines::substitution(kBin), Permutation::identity(kBin), PropertyKind::W,
                               TransducerClass::theta_input_preserving);
  CHECK(satisfies(sd, words(kBin, {"0"})).decider == Decider::w_preserving);
}

TEST_CASE("maximality examples") {
  PropertyDescriptor empty_s =
      desc(Transducer::empty(kDna), kDelta, PropertyKind::S, TransducerClass::theta_input_altering);
  CHECK(is_maximal(empty_s, Nfa::universal(kDna)).satisfied);
  Verdict plus = is_maximal(empty_s, Nfa::nonempty(kDna));
  CHECK_FALSE(plus.satisfied);
  CHECK(plus.extension == Word{});
  CHECK(find_extension(empty_s, Nfa::nonempty(kDna), 3) == Word{});

  PropertyDescriptor id_s =
      desc(Transducer::identity(kDna), kDelta, PropertyKind::S, TransducerClass::theta_input_altering);
  CHECK_THROWS_AS(is_maximal(id_s, Nfa::empty(kDna)), PreconditionError);
  CHECK_THROWS_AS(is_maximal(h_prop(PropertyKind::S), Nfa::empty(kDna)), PreconditionError);
  // A language that does not satisfy the property is rejected.
  PropertyDescriptor h_w = h_prop(PropertyKind::W);
  CHECK_THROWS_AS(is_maximal(h_w, words(kDna, {"AGG", "CCA"})), PreconditionError);

  PropertyDescriptor comp = dna_property("compliant", DnaVariant::normal);
  REQUIRE(comp.asserted_class == TransducerClass::theta_input_altering);
  Nfa d2 = parse_regex("(A|C|G|T)(A|C|G|T)", kDna);
  Verdict v = is_maximal(comp, d2);
  CHECK_FALSE(v.satisfied);
  CHECK(v.extension == Word{});
  CHECK(is_maximal(comp, unite(d2, Nfa::epsilon(kDna))).satisfied);
}

TEST_CASE("random deciders agree with brute force") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    const bool dna = iter % 2;
    const Alphabet al = dna ? kDna : kBin;
    Permutation th = dna ? kDelta : Permutation::mirror(kBin);
    Transducer t = oracle::random_transducer(rng, al, 1 + iter % 3, 2 + iter % 7);
    auto l = oracle::random_language(rng, al, 4, 3);
    Nfa ln = Nfa::words(al, l);
    INFO("iter " << iter);

    PropertyDescriptor s = desc(t, th, PropertyKind::S), w = desc(t, th, PropertyKind::W);
    Verdict vs = satisfies_s(s, ln), vw = satisfies_w_general(w, ln);
    CHECK(vs.satisfied == !oracle::s_violation(t, th, l));
    CHECK(vw.satisfied == !oracle::w_violation(t, th, l));
    if (vs.satisfied) CHECK(vw.satisfied);
    DeciderOptions exact;
    exact.refute_total = 0;
    CHECK(satisfies_w_general(w, ln, exact).satisfied == vw.satisfied);
    if (vs.witness) CHECK(oracle::realizes(t, vs.witness->input, oracle::apply(th, vs.witness->output)));
    if (vw.witness) {
      CHECK(is_violation(w, ln, *vw.witness));
      CHECK(vw.witness->input != vw.witness->output);
    }
    // 3-independence: satisfied iff every subset of size <= 2 is.
    bool pairs_ok = true;
    for (const auto& sub : oracle::subsets(l, 2))
      if (!satisfies_w_general(w, Nfa::words(al, sub)).satisfied) pairs_ok = false;
    CHECK(pairs_ok == vw.satisfied);

    // Morphic theta goes through the partial identity route.
    Permutation m = dna ? Permutation::from_images(kDna, "TGCA", Extension::morphic) : Permutation::identity(kBin);
    PropertyDescriptor wm = desc(t, m, PropertyKind::W);
    CHECK(satisfies_w_general(wm, ln).satisfied == !oracle::w_violation(t, m, l));
  }
}

TEST_CASE("W_general on regular languages agrees with bounded search") {
  // The relation restricted to L x theta(L) of these machines is length
  // preserving, so bounded enumeration finds any violation on short words.
  std::vector<Nfa> langs = {parse_regex("0*1", kBin), parse_regex("(01)*", kBin), parse_regex("0+1+", kBin),
                            parse_regex("1*0", kBin), parse_regex("(0|1)(0|1)", kBin), parse_regex("(0|1)*", kBin),
                            parse_regex("0*10*", kBin)};
  std::vector<Transducer> ts = {machines::substitution(kBin), Transducer::identity(kBin)};
  std::vector<Permutation> thetas = {Permutation::mirror(kBin), Permutation::from_images(kBin, "10", Extension::antimorphic)};
  for (const auto& th : thetas)
    for (const auto& t : ts)
      for (const auto& l : langs) {
        PropertyDescriptor p = desc(t, th, PropertyKind::W);
        Verdict v = satisfies_w_general(p, l);
        auto bf = oracle::w_violation(t, th, oracle::language(l, 7));
        if (v.satisfied) {
          CHECK_FALSE(bf);
        } else {
          REQUIRE(v.witness);
          CHECK(is_violation(p, l, *v.witness));
        }
        if (bf) CHECK_FALSE(v.satisfied);
      }

  Permutation mirror = Permutation::mirror(kBin);
  PropertyDescriptor rot = desc(machines::rotate(kBin), mirror, PropertyKind::W);
  for (const char* re : {"(01)*", "(0|1)(0|1)"}) {
    Nfa l = parse_regex(re, kBin);
    CHECK(satisfies_w_general(rot, l).satisfied == !oracle::w_violation(rot.transducer, mirror, oracle::language(l, 7)));
  }
}

TEST_CASE("W_general reports the atom cap") {
  // Rotation on 0*1 gives many pumping triples and an exponential atom count.
  PropertyDescriptor rot = desc(machines::rotate(kBin), Permutation::mirror(kBin), PropertyKind::W);
  DeciderOptions opt;
  opt.atom_cap = 64;
  CHECK_THROWS_AS(satisfies_w_general(rot, parse_regex("0*1", kBin), opt), ResourceError);
}
