#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ocf {

// Base class for every error the library raises on purpose. The CLI maps
// subclasses to exit codes: ParseError -> 1, IoError -> 3, everything else -> 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Text could not be parsed. position() is a 0-based character offset into the
// offending piece of text (a formula, an ordinal literal, or a command line).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Arithmetic on degree or shift would exceed the machine-word range.
// Values never wrap silently.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class UnknownAtomError : public Error {
 public:
  using Error::Error;
};

class VocabularyMismatchError : public Error {
 public:
  using Error::Error;
};

// An operation required a conditional function (some state at rank 0) but got
// a free ranking.
class NotCFError : public Error {
 public:
  using Error::Error;
};

class NotNearlyCounterfactualError : public Error {
 public:
  using Error::Error;
};

class InfiniteValuesError : public Error {
 public:
  using Error::Error;
};

class UnsatisfiableError : public Error {
 public:
  using Error::Error;
};

class EmptyLevelError : public Error {
 public:
  using Error::Error;
};

// The observation handed to istar_index does not believe exactly the target
// formula's models.
class NotStrengtheningError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration was requested beyond the supported bounds.
class UniverseTooLargeError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ocf
