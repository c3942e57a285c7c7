#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace emforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument or violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow one of the accepted grammars.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& token, const std::string& why)
      : InvalidInput("parse error at '" + token + "': " + why), token_(token) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// An enumeration or matrix would exceed the configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::string size)
      : Error(what + " (size " + size + " exceeds cap)"), size_(std::move(size)) {}
  const std::string& size() const noexcept { return size_; }

 private:
  std::string size_;
};

/// A structural claim that must hold by construction failed at runtime.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace emforge
