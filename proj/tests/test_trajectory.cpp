#include <catch_amalgamated.hpp>
#include <random>

#include "dnacodec/property.hpp"
#include "dnacodec/regex.hpp"
#include "dnacodec/trajectory.hpp"
#include "oracle.hpp"

using namespace dnacodec;

namespace {

const Alphabet kBin("01");
const Alphabet kDna = Alphabet::dna();

// Brute-force image of {x} under one of the four operators, outputs up to max_out.
std::set<Word> op_image(TrajectoryOp op, const oracle::Traj& e, const Alphabet& al, const Word& x, std::size_t max_out) {
  std::set<Word> out;
  bool plus = op == TrajectoryOp::shuffle_plus || op == TrajectoryOp::delete_plus;
  if (op == TrajectoryOp::shuffle_star || op == TrajectoryOp::shuffle_plus) {
    for (const auto& w : oracle::all_words(al.symbols(), max_out - std::min(max_out, x.size()))) {
      if (plus && w.empty()) continue;
      for (const auto& t : oracle::words_of("01", x.size() + w.size())) {
        if (!e.match(t)) continue;
        if (auto y = oracle::shuffle(x, t, w)) out.insert(*y);
      }
    }
  } else {
    for (const auto& t : oracle::words_of("01", x.size())) {
      if (!e.match(t)) continue;
      Word y, gone;
      for (std::size_t i = 0; i < t.size(); ++i) (t[i] == '0' ? y : gone).push_back(x[i]);
      if (plus && gone.empty()) continue;
      if (y.size() <= max_out) out.insert(y);
    }
  }
  return out;
}

std::string random_regex(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  switch (pick(rng)) {
    case 0: return "0";
    case 1: return "1";
    case 2: return "(" + random_regex(rng, depth - 1) + ")*";
    case 3: return "(" + random_regex(rng, depth - 1) + ")+";
    case 4: return "(" + random_regex(rng, depth - 1) + "|" + random_regex(rng, depth - 1) + ")";
    default: return random_regex(rng, depth - 1) + random_regex(rng, depth - 1);
  }
}

}  // namespace

TEST_CASE("shuffle and delete on a trajectory") {
  CHECK(shuffle_on_trajectory("1122", "001010", "34") == Word{"113242"});
  CHECK(shuffle_on_trajectory("ACG", "000", "") == Word{"ACG"});
  CHECK_FALSE(shuffle_on_trajectory("ab", "011", "cd"));
  CHECK(delete_on_trajectory("113242", "001010", "34") == Word{"1122"});
  CHECK(delete_on_trajectory("ACG", "000", "") == Word{"ACG"});
  CHECK_FALSE(delete_on_trajectory("113242", "001010", "35"));
}

TEST_CASE("shuffle and delete are dual") {
  Alphabet ab("ab");
  for (const auto& x : oracle::all_words("ab", 3))
    for (const auto& w : oracle::all_words("ab", 2))
      for (const auto& t : oracle::words_of("01", x.size() + w.size())) {
        auto y = shuffle_on_trajectory(x, t, w);
        CHECK(y == oracle::shuffle(x, t, w));
        if (y) CHECK(delete_on_trajectory(*y, t, w) == x);
        for (const auto& z : oracle::words_of("ab", t.size()))
          CHECK((delete_on_trajectory(z, t, w) == x) == (shuffle_on_trajectory(x, t, w) == z));
      }
}

TEST_CASE("operator transducers on examples") {
  Alphabet ab("ab");
  Transducer t2 = trajectory_transducer(TrajectoryOp::shuffle_star, "0*", ab);
  for (const auto& p : oracle::pairs(t2, 4)) CHECK(p.input == p.output);
  CHECK(oracle::realizes(t2, "aba", "aba"));

  Transducer t4 = trajectory_transducer(TrajectoryOp::shuffle_plus, "0*1", ab);
  CHECK(oracle::image(t4, "ab", 5) == std::set<Word>{"aba", "abb"});

  Alphabet digits("1234");
  Transducer t1 = trajectory_transducer(TrajectoryOp::delete_star, "001010", digits);
  CHECK(oracle::image(t1, "113242", 6).count("1122"));
  Transducer t1b = trajectory_transducer(TrajectoryOp::delete_star, "1*0+1*", digits);
  CHECK(oracle::image(t1b, "113242", 6).count("324"));
  CHECK_FALSE(oracle::image(t1b, "113242", 6).count("1122"));
}

TEST_CASE("operator transducers agree with the word operations") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    std::string e = iter < 4 ? std::vector<std::string>{"1*0+1*", "0+", "(01)*", "0*1"}[iter] : random_regex(rng, 3);
    oracle::Traj te(e);
    for (const Alphabet& al : {kBin, Alphabet("abc")}) {
      for (auto op : {TrajectoryOp::delete_star, TrajectoryOp::shuffle_star, TrajectoryOp::delete_plus,
                      TrajectoryOp::shuffle_plus}) {
        Transducer t = trajectory_transducer(op, e, al);
        const std::size_t n = al.size() == 2 ? 3 : 2;
        for (const auto& x : oracle::all_words(al.symbols(), n)) {
          std::size_t max_out = x.size() + 2;
          INFO("e=" << e << " x=" << x);
          CHECK(oracle::image(t, x, max_out) == op_image(op, te, al, x, max_out));
        }
      }
    }
  }
}

TEST_CASE("direct operator languages") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    std::string e = random_regex(rng, 3);
    oracle::Traj te(e);
    auto l = oracle::random_language(rng, kBin, 3, 3);
    Nfa x = Nfa::words(kBin, l);
    for (bool plus : {false, true}) {
      auto sh = oracle::language(shuffle_language(x, e, plus), 5);
      auto de = oracle::language(delete_language(x, e, plus), 5);
      std::set<Word> sh_bf, de_bf;
      for (const auto& w : l) {
        auto a = op_image(plus ? TrajectoryOp::shuffle_plus : TrajectoryOp::shuffle_star, te, kBin, w, 5);
        auto b = op_image(plus ? TrajectoryOp::delete_plus : TrajectoryOp::delete_star, te, kBin, w, 5);
        sh_bf.insert(a.begin(), a.end());
        de_bf.insert(b.begin(), b.end());
      }
      INFO("e=" << e);
      CHECK(std::set<Word>(sh.begin(), sh.end()) == sh_bf);
      CHECK(std::set<Word>(de.begin(), de.end()) == de_bf);
    }
  }
}

TEST_CASE("bond-free operator") {
  TrajectoryPair no{"0+", "0+", true}, sc{"1*0+1*", "0+", true}, c{"1*0+1*", "0+", false};
  for (const auto& w : std::vector<Word>{"A", "ACG", "TT"}) {
    std::vector<Word> one = {w};
    CHECK(oracle::language(bond_free_operator(no, Nfa::words(kDna, one)), 4) == std::vector<Word>{w});
  }
  std::vector<Word> acg = {"ACG"};
  auto inf = oracle::language(bond_free_operator(sc, Nfa::words(kDna, acg)), 4);
  CHECK(std::set<Word>(inf.begin(), inf.end()) == std::set<Word>{"A", "C", "G", "AC", "CG", "ACG"});
  auto proper = oracle::language(bond_free_operator(c, Nfa::words(kDna, acg)), 4);
  CHECK(std::set<Word>(proper.begin(), proper.end()) == std::set<Word>{"A", "C", "G", "AC", "CG"});
  CHECK(is_empty(bond_free_operator(c, Nfa::empty(kDna))));
  CHECK(is_empty(bond_free_operator(sc, Nfa::empty(kDna))));
}

TEST_CASE("bond-free operator matches the compiled transducer") {
  Permutation d = Permutation::dna_involution();
  std::vector<TrajectoryPair> pairs = {{"1*0+1*", "0+", true}, {"1*0+1*", "0+", false}, {"0+", "0+", true},
                                       {"0+1*", "0*1+", false}, {"(01)*", "1*0*", true}};
  for (const auto& p : pairs) {
    PropertyDescriptor desc = compile_trajectory_property(p, d);
    oracle::Traj e1(p.e1), e2(p.e2);
    for (const auto& x : oracle::all_words("ACGT", 3)) {
      std::vector<Word> one = {x};
      Nfa single = Nfa::words(kDna, one);
      auto a = oracle::language(bond_free_operator(p, single), 5);
      auto b = oracle::language(image(desc.transducer, single), 5);
      INFO(p.e1 << " " << p.e2 << " " << p.strict << " x=" << x);
      CHECK(a == b);
      for (const auto& z : oracle::all_words("ACGT", 3))
        CHECK((std::find(a.begin(), a.end(), z) != a.end()) == oracle::in_phi(one, e1, e2, p.strict, z));
    }
  }
}

TEST_CASE("trajectory compilation needs an involution") {
  Permutation c = Permutation::from_images(Alphabet("012"), "120", Extension::antimorphic);
  CHECK_THROWS(compile_trajectory_property({"0+", "0+", true}, c));
  CHECK_THROWS(compile_trajectory_property({"0+", "0+", true}, Permutation::identity(kDna)));
}
