#pragma once

#include <stdexcept>
#include <string>

namespace dnacodec {

// Symbol outside the alphabet, alphabets that do not match, bad tables.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed regex, FAdo text, or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A decider was called outside its contract.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A state or atom cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dnacodec
