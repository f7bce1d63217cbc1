#pragma once

#include <string_view>

#include "dnacodec/nfa.hpp"

namespace dnacodec {

// Regular expressions over single-character symbols.
//
//   x          a symbol of the alphabet
//   @epsilon   the empty word (also the UTF-8 letter epsilon)
//   @empty_set the empty language (also the UTF-8 empty set sign)
//   e*         star
//   e+         one or more; '+' written directly after an operand
//   e|f        union; ' + ' (with whitespace before it) is also a union
//   (e)        grouping
//
// Whitespace is otherwise ignored. Throws ParseError.
Nfa parse_regex(std::string_view text, const Alphabet& alphabet);

}  // namespace dnacodec
