#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pnspan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicatePointError : public Error {
 public:
  DuplicatePointError(std::size_t first, std::size_t second)
      : Error("duplicate points: " + std::to_string(first) + " and " + std::to_string(second)),
        first_(first),
        second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Invalid builder/space parameter (bad epsilon, index out of context, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

/// Graph is not (strongly) connected; names one unreachable ordered pair.
class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError(std::size_t from, std::size_t to)
      : Error("vertex " + std::to_string(to) + " is unreachable from " + std::to_string(from)),
        from_(from),
        to_(to) {}
  std::size_t from() const noexcept { return from_; }
  std::size_t to() const noexcept { return to_; }

 private:
  std::size_t from_;
  std::size_t to_;
};

/// Raised by operations that require a PN-graph; carries the failing pair.
class NotNavigableError : public Error {
 public:
  NotNavigableError(std::size_t u, std::size_t v)
      : Error("not a PN-graph: no out-neighbor of " + std::to_string(u) +
              " is strictly closer to " + std::to_string(v)),
        u_(u),
        v_(v) {}
  std::size_t source() const noexcept { return u_; }
  std::size_t target() const noexcept { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

}  // namespace pnspan
