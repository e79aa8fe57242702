#pragma once

#include <stdexcept>
#include <string>

namespace udlneg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduction found an application whose function position can never become an
// abstraction (a lexicon template applied something that is not a function).
struct IllTyped : Error {
  using Error::Error;
};

// existential_closure was handed a term that is not a one-handle abstraction.
struct NotClosable : Error {
  using Error::Error;
};

// The model interpretation has no entry for a predicate used in the formula.
struct UnknownPredicate : Error {
  explicit UnknownPredicate(const std::string& pred)
      : Error("unknown predicate: " + pred), predicate(pred) {}
  std::string predicate;
};

struct MalformedLine : Error {
  MalformedLine(int line_no, const std::string& why)
      : Error("line " + std::to_string(line_no) + ": " + why), line(line_no) {}
  int line;
};

struct CyclicTree : Error {
  explicit CyclicTree(int sentence_no)
      : Error("sentence " + std::to_string(sentence_no) + ": head links form a cycle"),
        sentence(sentence_no) {}
  int sentence;
};

struct MultipleRoots : Error {
  explicit MultipleRoots(int sentence_no)
      : Error("sentence " + std::to_string(sentence_no) + ": more than one node attached to root"),
        sentence(sentence_no) {}
  int sentence;
};

struct DisconnectedGraph : Error {
  using Error::Error;
};

// Two enhancement rules tried to give the same edge different labels.
struct ConflictingRules : Error {
  using Error::Error;
};

// Canonical text form could not be parsed back into a term.
struct TermParseError : Error {
  using Error::Error;
};

}  // namespace udlneg
