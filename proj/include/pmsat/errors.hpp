#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmsat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An exhaustive operation was asked to run above its configured size limit.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t requested, std::size_t limit)
      : Error(what + ": size " + std::to_string(requested) + " exceeds limit " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// Zero or several subsets have a non-positive principal minor.
class UniquenessViolation : public Error {
 public:
  UniquenessViolation(const std::string& what, std::vector<std::uint64_t> offending)
      : Error(what), offending_(std::move(offending)) {}

  /// Offending subset masks (possibly truncated for very large counts).
  const std::vector<std::uint64_t>& offending() const { return offending_; }

 private:
  std::vector<std::uint64_t> offending_;
};

class MissingWitness : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace pmsat
