#include "dnacodec/alphabet.hpp"

#include <algorithm>
#include <numeric>

#include "dnacodec/errors.hpp"

namespace dnacodec {

Alphabet::Alphabet() { index_.fill(-1); }

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  if (symbols_.empty()) throw DomainError("alphabet must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols_[i]);
    if (c <= ' ' || c == '@' || c == '*' || c == '(' || c == ')' || c == '|' || c == '+')
      throw DomainError(std::string("symbol not allowed in an alphabet: '") + symbols_[i] + "'");
    if (index_[c] >= 0) throw DomainError(std::string("duplicate symbol '") + symbols_[i] + "'");
    index_[c] = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::dna() { return Alphabet("ACGT"); }

Alphabet Alphabet::generic(int size) {
  static const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (size < 1 || size > 36) throw DomainError("generic alphabet size must be in 1..36");
  return Alphabet(std::string_view(digits, static_cast<std::size_t>(size)));
}

bool Alphabet::contains_word(std::string_view w) const {
  return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
}

std::optional<Symbol> Alphabet::find(char c) const {
  auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return i;
}

Symbol Alphabet::index_of(char c) const {
  auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) throw DomainError(std::string("symbol '") + c + "' not in alphabet {" + symbols_ + "}");
  return i;
}

void Alphabet::check_word(std::string_view w) const {
  for (char c : w) index_of(c);
}

bool Alphabet::is_subset_of(const Alphabet& other) const {
  return std::all_of(symbols_.begin(), symbols_.end(), [&](char c) { return other.contains(c); });
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  std::string s = symbols_;
  for (char c : other.symbols_)
    if (!contains(c)) s.push_back(c);
  return Alphabet(s);
}

std::uint64_t count_words(std::size_t k, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > UINT64_MAX / std::max<std::size_t>(k, 1)) return UINT64_MAX;
    r *= k;
  }
  return r;
}

Word word_at(const Alphabet& a, std::size_t n, std::uint64_t index) {
  Word w(n, a.symbol(0));
  const std::uint64_t k = a.size();
  for (std::size_t i = n; i-- > 0;) {
    w[i] = a.symbol(static_cast<Symbol>(index % k));
    index /= k;
  }
  return w;
}

std::vector<Word> words_of_length(const Alphabet& a, std::size_t n) {
  std::uint64_t total = count_words(a.size(), n);
  std::vector<Word> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(word_at(a, n, i));
  return out;
}

std::vector<Word> words_up_to(const Alphabet& a, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto ws = words_of_length(a, len);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Permutation

Permutation::Permutation(Alphabet alphabet, std::vector<Symbol> table, Extension ext)
    : alphabet_(std::move(alphabet)), table_(std::move(table)), ext_(ext) {
  if (table_.size() != alphabet_.size())
    throw DomainError("permutation table size does not match the alphabet");
  std::vector<char> seen(table_.size(), 0);
  for (Symbol s : table_) {
    if (s < 0 || static_cast<std::size_t>(s) >= table_.size() || seen[static_cast<std::size_t>(s)])
      throw DomainError("permutation table is not a bijection");
    seen[static_cast<std::size_t>(s)] = 1;
  }
}

Permutation Permutation::from_images(Alphabet alphabet, std::string_view images, Extension ext) {
  if (images.size() != alphabet.size())
    throw DomainError("permutation needs one image per symbol");
  std::vector<Symbol> t;
  for (char c : images) t.push_back(alphabet.index_of(c));
  return Permutation(std::move(alphabet), std::move(t), ext);
}

Permutation Permutation::identity(Alphabet alphabet) {
  std::vector<Symbol> t(alphabet.size());
  std::iota(t.begin(), t.end(), 0);
  return Permutation(std::move(alphabet), std::move(t), Extension::morphic);
}

Permutation Permutation::mirror(Alphabet alphabet) {
  std::vector<Symbol> t(alphabet.size());
  std::iota(t.begin(), t.end(), 0);
  return Permutation(std::move(alphabet), std::move(t), Extension::antimorphic);
}

Permutation Permutation::dna_involution() {
  return from_images(Alphabet::dna(), "TGCA", Extension::antimorphic);
}

char Permutation::map_char(char c) const { return alphabet_.symbol(map(alphabet_.index_of(c))); }

Word Permutation::apply(std::string_view w) const {
  Word out(w.size(), '\0');
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    char img = map_char(w[i]);
    if (ext_ == Extension::antimorphic)
      out[n - 1 - i] = img;
    else
      out[i] = img;
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Symbol> t(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) t[static_cast<std::size_t>(table_[i])] = static_cast<Symbol>(i);
  return Permutation(alphabet_, std::move(t), ext_);
}

Permutation Permutation::power(int i) const {
  if (i < 0) return inverse().power(-i);
  Permutation r = identity(alphabet_);
  for (int k = 0; k < i; ++k) r = compose(*this, r);
  return r;
}

int Permutation::order() const {
  int result = 1;
  std::vector<char> seen(table_.size(), 0);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(table_[j])) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_involution() const { return order() <= 2; }

bool Permutation::operator==(const Permutation& other) const {
  return alphabet_ == other.alphabet_ && table_ == other.table_ && ext_ == other.ext_;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (!(a.alphabet() == b.alphabet())) throw DomainError("cannot compose permutations over different alphabets");
  std::vector<Symbol> t(a.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.map(b.map(static_cast<Symbol>(i)));
  Extension ext = a.extension() == b.extension() ? Extension::morphic : Extension::antimorphic;
  return Permutation(a.alphabet(), std::move(t), ext);
}

}  // namespace dnacodec
