#include "dnacodec/pcp.hpp"

#include <algorithm>
#include <functional>

#include "dnacodec/errors.hpp"

namespace dnacodec {

PcpInstance::PcpInstance(Alphabet al, std::vector<Word> a, std::vector<Word> b)
    : alphabet(std::move(al)), alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.empty()) throw DomainError("PCP instance needs at least one pair");
  if (alpha.size() != beta.size()) throw DomainError("alpha and beta must have the same number of words");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].empty() || beta[i].empty()) throw DomainError("PCP words must be nonempty");
    alphabet.check_word(alpha[i]);
    alphabet.check_word(beta[i]);
  }
}

namespace {

void check_sequence(std::size_t n, std::span<const std::size_t> seq) {
  if (seq.empty()) throw DomainError("a solution sequence must be nonempty");
  for (std::size_t i : seq)
    if (i >= n) throw DomainError("index " + std::to_string(i) + " out of range");
}

Sequence sequence_at(std::size_t k, std::size_t n, std::uint64_t index) {
  Sequence s(n);
  for (std::size_t i = n; i-- > 0;) {
    s[i] = static_cast<std::size_t>(index % k);
    index /= k;
  }
  return s;
}

}  // namespace

SolutionCheck check_solution(const PcpInstance& p, std::span<const std::size_t> seq) {
  check_sequence(p.size(), seq);
  SolutionCheck r;
  for (std::size_t i : seq) {
    r.top += p.alpha[i];
    r.bottom += p.beta[i];
  }
  r.solved = r.top == r.bottom;
  return r;
}

SolutionCheck check_solution(const ThetaPcpInstance& p, std::span<const std::size_t> seq) {
  SolutionCheck r = check_solution(p.pairs, seq);
  r.bottom = p.theta.apply(r.bottom);
  r.solved = r.top == r.bottom;
  return r;
}

std::optional<Sequence> solve_bounded(const PcpInstance& p, std::size_t max_len) {
  Sequence seq;
  // Depth-first in index order; top and bottom must stay prefix-comparable.
  std::function<bool(const Word&, const Word&, std::size_t)> dfs = [&](const Word& top, const Word& bot,
                                                                       std::size_t left) {
    if (!seq.empty() && top == bot) return left == 0;
    if (left == 0) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Word t = top + p.alpha[i], b = bot + p.beta[i];
      std::size_t m = std::min(t.size(), b.size());
      if (t.compare(0, m, b, 0, m) != 0) continue;
      seq.push_back(i);
      if (dfs(t, b, left - 1)) return true;
      seq.pop_back();
    }
    return false;
  };
  for (std::size_t n = 1; n <= max_len; ++n) {
    seq.clear();
    if (dfs(Word{}, Word{}, n)) return seq;
  }
  return std::nullopt;
}

std::optional<Sequence> solve_bounded(const ThetaPcpInstance& p, std::size_t max_len, Execution ex) {
  if (!(p.pairs.alphabet == p.theta.alphabet())) throw DomainError("theta and the instance use different alphabets");
  // theta reverses the bottom row, so prefix pruning does not apply;
  // enumerate sequences of each length in order.
  const std::size_t k = p.pairs.size();
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::uint64_t count = count_words(k, n);
    auto hit = search::first_match(
        count, [&](std::uint64_t i) { return check_solution(p, sequence_at(k, n, i)).solved; }, ex);
    if (hit) return sequence_at(k, n, *hit);
  }
  return std::nullopt;
}

namespace {

void require_binary(const Alphabet& al) {
  if (!al.contains('0') || !al.contains('1'))
    throw DomainError("the reduction needs an alphabet containing 0 and 1; got {" + al.symbols() + "}");
}

Word g_code(char c) { return c == '0' ? "00" : "01"; }
Word h_code(char c) { return c == '0' ? "10" : "11"; }

Word map_code(const Word& w, Word (*f)(char)) {
  Word r;
  for (char c : w) r += f(c);
  return r;
}

void require_binary_instance(const PcpInstance& p) {
  for (char c : p.alphabet.symbols())
    if (c != '0' && c != '1') throw DomainError("PCP instance must be over {0, 1}");
}

}  // namespace

ThetaPcpInstance reduce_to_theta_pcp(const PcpInstance& p, const Permutation& theta) {
  require_binary_instance(p);
  require_binary(theta.alphabet());
  if (!theta.antimorphic()) throw DomainError("the reduction needs an antimorphic theta");
  Permutation inv = theta.inverse();
  std::vector<Word> gamma, delta;
  for (std::size_t j = 0; j < p.size(); ++j) {
    gamma.push_back(map_code(p.alpha[j], g_code));
    Word rev(p.beta[j].rbegin(), p.beta[j].rend());
    delta.push_back(inv.apply(map_code(rev, h_code)));
  }
  gamma.push_back(h_code('0'));
  delta.push_back(inv.apply(g_code('0')));
  gamma.push_back(h_code('1'));
  delta.push_back(inv.apply(g_code('1')));
  return ThetaPcpInstance{PcpInstance(theta.alphabet(), std::move(gamma), std::move(delta)), theta};
}

Sequence map_solution(const PcpInstance& p, std::span<const std::size_t> seq) {
  if (!check_solution(p, seq).solved) throw DomainError("map_solution: the sequence is not a solution");
  Sequence out(seq.begin(), seq.end());
  Word w;
  for (std::size_t i : seq) w += p.alpha[i];
  const std::size_t l = p.size();
  for (std::size_t j = w.size(); j-- > 0;) out.push_back(w[j] == '0' ? l : l + 1);
  return out;
}

Word BlockCode::symbol(std::size_t gamma) const {
  Word w(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if ((gamma >> (width - 1 - i)) & 1U) w[i] = '1';
  return w;
}

Word BlockCode::encode_letter(const Alphabet& al, char c) const {
  return symbol(static_cast<std::size_t>(al.index_of(c)));
}

Word BlockCode::encode_index(std::size_t i) const { return symbol(sigma + i); }

PreservingReduction pcp_to_preserving_transducer(const PcpInstance& p, const Permutation& theta) {
  const Alphabet& ak = theta.alphabet();
  require_binary(ak);
  BlockCode code;
  code.sigma = p.alphabet.size();
  code.indices = p.size();
  while ((std::size_t{1} << code.width) < code.sigma + code.indices) ++code.width;

  auto h = [&](const Word& z) {
    Word r;
    for (char c : z) r += code.encode_letter(p.alphabet, c);
    return r;
  };
  std::vector<Word> sigma_codes, index_codes, all_codes;
  for (char c : p.alphabet.symbols()) sigma_codes.push_back(code.encode_letter(p.alphabet, c));
  for (std::size_t i = 0; i < p.size(); ++i) index_codes.push_back(code.encode_index(i));
  all_codes = sigma_codes;
  all_codes.insert(all_codes.end(), index_codes.begin(), index_codes.end());

  // T_R: every w outside h(Sigma+ I+) is related to every word.
  Nfa encoded = concat(plus(Nfa::words(ak, sigma_codes)), plus(Nfa::words(ak, index_codes)));
  Transducer result = Transducer::product(complement(encoded), Nfa::universal(ak));

  auto gadget = [&](const std::vector<Word>& z) {
    Transducer t(ak);
    State s = t.add_state(), f = t.add_state();
    t.set_initial(s);
    t.set_final(f);
    for (std::size_t i = 0; i < z.size(); ++i) t.add_edge(s, h(z[i]), theta.apply(index_codes[i]), s);
    for (const Word& a : index_codes)
      for (const Word& b : index_codes) t.add_edge(s, a, theta.apply(b), f);
    for (const Word& a : sigma_codes)
      for (const Word& b : sigma_codes) t.add_edge(s, a, theta.apply(b), f);
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Word& zi = z[i];
      for (const Word& zp : words_up_to(p.alphabet, zi.size())) {
        if (zp.empty()) continue;
        bool prefix = zi.compare(0, zp.size(), zp) == 0;
        if (!prefix) {
          t.add_edge(s, h(zp), theta.apply(index_codes[i]), f);
        } else if (zp.size() < zi.size()) {
          // u ends inside z_i.
          for (const Word& j : index_codes) t.add_edge(s, h(zp) + j, theta.apply(index_codes[i]), f);
        }
      }
    }
    for (const Word& g : all_codes) {
      t.add_edge(f, g, "", f);
      t.add_edge(f, "", theta.apply(g), f);
    }
    return t;
  };
  result = unite(result, gadget(p.alpha));
  result = unite(result, gadget(p.beta));
  return PreservingReduction{std::move(result), code};
}

Transducer theta_pcp_to_altering_transducer(const ThetaPcpInstance& p) {
  Permutation sq = compose(p.theta, p.theta);
  Transducer t(p.pairs.alphabet);
  State s = t.add_state();
  t.set_initial(s);
  t.set_final(s);
  for (std::size_t i = 0; i < p.pairs.size(); ++i) t.add_edge(s, p.pairs.alpha[i], sq.apply(p.pairs.beta[i]), s);
  return t;
}

}  // namespace dnacodec
