#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace delaycode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAPrefix : public Error {
 public:
  NotAPrefix() : Error("first sequence is not a prefix of the second") {}
};

class EmptySequence : public Error {
 public:
  EmptySequence() : Error("operation requires a non-empty sequence") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidCodeTuple : public Error {
 public:
  using Error::Error;
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

class NotDecodable : public Error {
 public:
  using Error::Error;
};

class InconsistentBits : public Error {
 public:
  using Error::Error;
};

class NonRegular : public Error {
 public:
  NonRegular() : Error("code-tuple is not regular (no table is reachable from every table)") {}
};

class NonIrreducible : public Error {
 public:
  NonIrreducible() : Error("code-tuple is not irreducible") {}
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class InfeasibleBounds : public Error {
 public:
  using Error::Error;
};

/// Raised when a library result fails its own post-condition re-check.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace delaycode
