#pragma once

#include <stdexcept>
#include <string>

namespace perdom {

// Root of every error raised by the library. The CLI maps subclasses to
// exit codes (see tools/perdom.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PERDOM_ERROR(Name)                 \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

PERDOM_ERROR(IllegalType)
PERDOM_ERROR(DimensionMismatch)
PERDOM_ERROR(IndexOutOfRange)
PERDOM_ERROR(NotDominant)
PERDOM_ERROR(BudgetExceeded)
PERDOM_ERROR(MalformedNu)
PERDOM_ERROR(NotCodimOne)
PERDOM_ERROR(ZeroDimensional)
PERDOM_ERROR(SingularTransform)
PERDOM_ERROR(ValidationError)

#undef PERDOM_ERROR

// Parse failures carry the 1-based line and the offending key (may be empty).
class ParseError : public Error {
 public:
  ParseError(int line, std::string key, const std::string& msg)
      : Error("line " + std::to_string(line) + (key.empty() ? "" : ", key '" + key + "'") +
              ": " + msg),
        line_(line),
        key_(std::move(key)) {}
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

}  // namespace perdom
