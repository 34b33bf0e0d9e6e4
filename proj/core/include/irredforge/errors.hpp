#ifndef IRREDFORGE_ERRORS_HPP
#define IRREDFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irredforge {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation precondition or invalid user input. CLI exit code 2.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Broken internal invariant (a bug, not a usage error). CLI exit code 1.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

class ParseError : public PreconditionError {
 public:
  explicit ParseError(const std::string& msg) : PreconditionError(msg) {}
};

}  // namespace irredforge

#endif
