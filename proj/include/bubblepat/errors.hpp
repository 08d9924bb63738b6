#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bubblepat {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is the 0-based character offset of
/// the first offending character, or npos when not applicable.
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// No usable token in the input, or a character that cannot start one.
class EmptyTokenStream : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A value appears twice where distinct values are required.
class DuplicateValue : public ParseError {
 public:
  explicit DuplicateValue(int value, std::size_t position = npos)
      : ParseError("duplicate value " + std::to_string(value), position),
        value_(value) {}

  int value() const { return value_; }

 private:
  int value_;
};

/// A permutation entry outside 1..n.
class OutOfRange : public ParseError {
 public:
  OutOfRange(int value, int n, std::size_t position = npos)
      : ParseError("value " + std::to_string(value) +
                       " out of range for a permutation of length " +
                       std::to_string(n),
                   position),
        value_(value) {}

  int value() const { return value_; }

 private:
  int value_;
};

/// Operation requires a non-empty permutation.
class EmptyPermutation : public Error {
 public:
  EmptyPermutation() : Error("operation requires a non-empty permutation") {}
};

/// append_max requires its input not to end with its maximum.
class EndsWithMax : public Error {
 public:
  EndsWithMax() : Error("permutation already ends with its maximum") {}
};

/// witness_pair only applies to permutations classified NotAClass.
class IsGoodPermutation : public Error {
 public:
  explicit IsGoodPermutation(const std::string& perm)
      : Error("no witness pair: " + perm + " is a good permutation") {}
};

/// A basis construction was invoked on a permutation of the wrong case.
class WrongCase : public Error {
 public:
  using Error::Error;
};

/// inverse_basis_set rejects sets containing a non-good member.
class ContainsBadPermutation : public Error {
 public:
  explicit ContainsBadPermutation(const std::string& member)
      : Error("set contains the non-good permutation " + member),
        member_(member) {}

  const std::string& member() const { return member_; }

 private:
  std::string member_;
};

/// A requested enumeration horizon exceeds the configured practical cap.
class HorizonExceeded : public Error {
 public:
  HorizonExceeded(int requested, int cap)
      : Error("horizon " + std::to_string(requested) +
              " exceeds the practical cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  int requested() const { return requested_; }
  int cap() const { return cap_; }

 private:
  int requested_;
  int cap_;
};

/// empirical_basis is undefined when the inverse image is not a downset.
class NotADownset : public Error {
 public:
  NotADownset(const std::string& outside, const std::string& inside)
      : Error("inverse image is not a downset: " + inside +
              " is inside but its subpermutation " + outside + " is not"),
        outside_(outside),
        inside_(inside) {}

  const std::string& outside() const { return outside_; }
  const std::string& inside() const { return inside_; }

 private:
  std::string outside_;
  std::string inside_;
};

/// growth_estimate needs at least one computed count.
class EmptySequence : public Error {
 public:
  EmptySequence() : Error("count sequence is empty") {}
};

/// A constructed result disagrees with the brute-force oracle.
class CrossCheckMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace bubblepat
