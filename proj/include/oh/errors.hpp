#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on a mathematical input (zero scale factor,
/// degree bound broken, invalid automorphism, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// [u, -] does not restrict to a derivation of A_h.
class NotStable : public Error {
 public:
  using Error::Error;
};

/// A localized element cannot be split into inner + special + Delta parts.
class NotDecomposable : public Error {
 public:
  using Error::Error;
};

/// A pair of images (D(x), D(t)) violates the defining relation.
class NotADerivation : public Error {
 public:
  using Error::Error;
};

/// Enumeration limits were reached before the answer was certain.
class BoundsExceeded : public Error {
 public:
  using Error::Error;
};

/// Well-formed input of the wrong shape for the request (t inside a
/// polynomial, a derivation where an element was expected, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownSymbol : public SyntaxError {
 public:
  UnknownSymbol(const std::string& name, std::size_t offset)
      : SyntaxError("unknown symbol '" + name + "'", offset) {}
};

}  // namespace oh
