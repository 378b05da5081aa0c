#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dicrit {

// Every failure carries a stable kind string; the CLI reports it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DICRIT_ERROR_KIND(Name)                                        \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

DICRIT_ERROR_KIND(InsufficientTruncation);
DICRIT_ERROR_KIND(PoleAtPoint);
DICRIT_ERROR_KIND(NoFiniteValue);
DICRIT_ERROR_KIND(SolverStall);
DICRIT_ERROR_KIND(NonIntegralResult);
DICRIT_ERROR_KIND(ParseError);
DICRIT_ERROR_KIND(PreconditionFailed);

#undef DICRIT_ERROR_KIND

}  // namespace dicrit
