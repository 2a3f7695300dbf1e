#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swapdeon {

// Base class for every error raised on bad input (formulas, logic names,
// model/proof files). The CLI maps all of these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, Signature, Sugar };

  ParseError(Kind kind, std::size_t offset, const std::string& message)
      : Error(message + " at offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

// Raised when a closure grows beyond its configured cap.
class ClosureCapError : public Error {
 public:
  using Error::Error;
};

class LogicError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

class ProofFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace swapdeon
