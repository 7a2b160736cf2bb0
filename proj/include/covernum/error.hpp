#pragma once

#include <stdexcept>
#include <string>

namespace covernum {

enum class ErrorKind {
  invalid_argument,  // bad parameters, malformed specs
  parse,             // malformed graph text
  capacity,          // more than 64 vertices, family size caps
  unsupported,       // no constructive cover for the requested class
  budget,            // exact search refused: input exceeds its budget
  host_mismatch,     // EdgeSet used with a graph other than its host
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define COVERNUM_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  }

COVERNUM_DEFINE_ERROR(InvalidArgument, invalid_argument);
COVERNUM_DEFINE_ERROR(ParseError, parse);
COVERNUM_DEFINE_ERROR(CapacityError, capacity);
COVERNUM_DEFINE_ERROR(UnsupportedClass, unsupported);
COVERNUM_DEFINE_ERROR(BudgetExceeded, budget);
COVERNUM_DEFINE_ERROR(HostMismatch, host_mismatch);

#undef COVERNUM_DEFINE_ERROR

}  // namespace covernum
