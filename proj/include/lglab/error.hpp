#pragma once

#include <stdexcept>
#include <string>

namespace lglab {

enum class ErrorCode {
  Parse = 1,
  Parameter = 2,
  Domain = 3,
  NotFound = 4,
  Unsupported = 5,
  Io = 6,
  Invalid = 7,
  Internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Expression syntax error; `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(ErrorCode::Parameter, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorCode::Unsupported, what) {}
};

/// Search exhausted its bounds; carries the frontier that was explored.
class NotFoundError : public Error {
 public:
  NotFoundError(const std::string& what, int max_order, int max_degree)
      : Error(ErrorCode::NotFound, what), max_order_(max_order), max_degree_(max_degree) {}
  int max_order() const noexcept { return max_order_; }
  int max_degree() const noexcept { return max_degree_; }

 private:
  int max_order_;
  int max_degree_;
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorCode::Internal, what) {}
};

}  // namespace lglab
