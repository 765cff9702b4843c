#ifndef STOLARSKY_ERRORS_HPP_
#define STOLARSKY_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stolarsky {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An argument lies outside the mathematical domain of the operation
// (non-positive interval endpoint, log of a non-positive value, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An intermediate or final value left the representable range.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Expression text failed to parse.  `offset` is the byte offset of the
// offending character; `expected` describes the acceptable tokens there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& expected)
      : Error("syntax error at offset " + std::to_string(offset) +
              ": expected " + expected),
        offset_(offset),
        expected_(expected) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

// A target value lies outside the open interval it must belong to.
class OutOfRangeError : public Error {
 public:
  explicit OutOfRangeError(const std::string& msg) : Error(msg) {}
};

// A root-bracketing search found no sign change in its window.
class NotBracketedError : public Error {
 public:
  explicit NotBracketedError(const std::string& msg) : Error(msg) {}
};

// The abscissa scan found neither a sign change nor a grid point within
// tolerance.
class NoRootFoundError : public Error {
 public:
  explicit NoRootFoundError(const std::string& msg) : Error(msg) {}
};

// f' - slope vanishes on (essentially) the whole grid: the abscissa set is
// the entire interval and a root list would be meaningless.
class DegenerateFunctionError : public Error {
 public:
  explicit DegenerateFunctionError(const std::string& msg) : Error(msg) {}
};

// A derivative formula's denominator is too small to divide by.
class DegenerateDenominatorError : public Error {
 public:
  explicit DegenerateDenominatorError(const std::string& msg) : Error(msg) {}
};

// The requested parameter branch is outside the scope of the operation
// (e.g. the implicit-function machinery requires a generic exponent).
class BranchError : public Error {
 public:
  explicit BranchError(const std::string& msg) : Error(msg) {}
};

}  // namespace stolarsky

#endif  // STOLARSKY_ERRORS_HPP_
