#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dnacodec {

using Symbol = int;
inline constexpr Symbol kEpsilon = -1;

// Words are plain byte strings over the symbols of an Alphabet.
using Word = std::string;

class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string_view symbols);

  static Alphabet dna();              // ACGT
  static Alphabet generic(int size);  // 0..9 then a..z

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char symbol(Symbol index) const { return symbols_[static_cast<std::size_t>(index)]; }

  bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
  bool contains_word(std::string_view w) const;
  std::optional<Symbol> find(char c) const;
  Symbol index_of(char c) const;  // throws DomainError
  void check_word(std::string_view w) const;

  bool is_subset_of(const Alphabet& other) const;
  // Symbols of this alphabet followed by the new symbols of other.
  Alphabet merged(const Alphabet& other) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

// All words of length exactly n, in lexicographic order.
std::vector<Word> words_of_length(const Alphabet& a, std::size_t n);
// All words of length at most n, shortlex.
std::vector<Word> words_up_to(const Alphabet& a, std::size_t n);
// Word number `index` among words of length n in lexicographic order.
Word word_at(const Alphabet& a, std::size_t n, std::uint64_t index);
// k^n, saturating at UINT64_MAX.
std::uint64_t count_words(std::size_t k, std::size_t n);

bool shortlex_less(std::string_view a, std::string_view b);

enum class Extension { morphic, antimorphic };

// A permutation of the alphabet, extended to words morphically or antimorphically.
class Permutation {
 public:
  Permutation(Alphabet alphabet, std::vector<Symbol> table, Extension ext);
  // images[i] is the image of alphabet.symbol(i).
  static Permutation from_images(Alphabet alphabet, std::string_view images, Extension ext);
  static Permutation identity(Alphabet alphabet);
  static Permutation mirror(Alphabet alphabet);
  static Permutation dna_involution();

  const Alphabet& alphabet() const { return alphabet_; }
  Extension extension() const { return ext_; }
  bool antimorphic() const { return ext_ == Extension::antimorphic; }
  const std::vector<Symbol>& table() const { return table_; }

  Symbol map(Symbol s) const { return table_[static_cast<std::size_t>(s)]; }
  char map_char(char c) const;
  Word apply(std::string_view w) const;

  Permutation inverse() const;
  Permutation power(int i) const;
  int order() const;
  // The letter table squares to the identity; together with antimorphic()
  // this makes the word map an involution.
  bool is_involution() const;
  bool is_antimorphic_involution() const { return antimorphic() && is_involution(); }

  bool operator==(const Permutation& other) const;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> table_;
  Extension ext_;
};

// apply(compose(a, b), w) == a.apply(b.apply(w))
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace dnacodec
