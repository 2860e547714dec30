#pragma once

#include <stdexcept>
#include <string>

namespace wirekit {

// Base of every error raised by the library. Each subclass names one failure
// mode so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotASum : public Error {
 public:
  using Error::Error;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class SequentialGate : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class CodecError : public Error {
 public:
  using Error::Error;
};

// Raised when a DFF-free cycle makes a circuit's behaviour non-functional.
class CombinationalLoop : public Error {
 public:
  using Error::Error;
};

// Raised when a purely combinational operation meets a DFF.
class HasDelay : public Error {
 public:
  using Error::Error;
};

class DomainTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Malformed simulation input specification.
class StimulusError : public Error {
 public:
  using Error::Error;
};

}  // namespace wirekit
