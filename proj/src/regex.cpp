#include "dnacodec/regex.hpp"

#include <string>

#include "dnacodec/errors.hpp"

namespace dnacodec {

namespace {

constexpr std::string_view kEpsUtf8 = "\xCE\xB5";        // U+03B5
constexpr std::string_view kEmptyUtf8 = "\xE2\x88\x85";  // U+2205

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& al) : s_(text), al_(al) {}

  Nfa parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    Nfa r = alternation();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("regex: " + msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  bool skip_ws() {
    bool any = false;
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) {
      ++pos_;
      any = true;
    }
    return any;
  }

  bool starts(std::string_view tok) const { return s_.substr(pos_, tok.size()) == tok; }

  bool at_alternation() {
    std::size_t save = pos_;
    bool ws = skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '|' || (ws && s_[pos_] == '+'))) {
      ++pos_;
      return true;
    }
    pos_ = save;
    return false;
  }

  bool at_atom_start() {
    std::size_t save = pos_;
    skip_ws();
    bool ok = pos_ < s_.size() && s_[pos_] != ')' && s_[pos_] != '|' && s_[pos_] != '*' && s_[pos_] != '+';
    pos_ = save;
    return ok;
  }

  Nfa alternation() {
    Nfa r = concatenation();
    while (at_alternation()) r = unite(r, concatenation());
    return r;
  }

  Nfa concatenation() {
    if (!at_atom_start()) fail("expected an operand");
    Nfa r = postfix();
    while (at_atom_start()) r = concat(r, postfix());
    return r;
  }

  Nfa postfix() {
    skip_ws();
    Nfa r = atom();
    while (pos_ < s_.size()) {
      if (s_[pos_] == '*') {
        r = star(r);
        ++pos_;
      } else if (s_[pos_] == '+') {
        r = plus(r);
        ++pos_;
      } else {
        break;
      }
    }
    return r;
  }

  Nfa atom() {
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (s_[pos_] == '(') {
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ')') fail("empty group");
      Nfa r = alternation();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return r;
    }
    if (starts("@epsilon")) {
      pos_ += 8;
      return Nfa::epsilon(al_);
    }
    if (starts("@empty_set")) {
      pos_ += 10;
      return Nfa::empty(al_);
    }
    if (starts(kEpsUtf8)) {
      pos_ += kEpsUtf8.size();
      return Nfa::epsilon(al_);
    }
    if (starts(kEmptyUtf8)) {
      pos_ += kEmptyUtf8.size();
      return Nfa::empty(al_);
    }
    char c = s_[pos_];
    if (!al_.contains(c)) fail("symbol '" + std::string(1, c) + "' not in alphabet {" + al_.symbols() + "}");
    ++pos_;
    Nfa r(al_);
    State a = r.add_state(), b = r.add_state();
    r.set_initial(a);
    r.set_final(b);
    r.add_edge(a, c, b);
    return r;
  }

  std::string_view s_;
  const Alphabet& al_;
  std::size_t pos_ = 0;
};

}  // namespace

Nfa parse_regex(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).parse(); }

}  // namespace dnacodec
