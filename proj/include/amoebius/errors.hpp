#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amoebius {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::string const &msg, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " +
              msg),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

#define AMOEBIUS_ERROR(Name)                                                   \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

AMOEBIUS_ERROR(ClosureExceedsCap);
AMOEBIUS_ERROR(BudgetExceeded);
AMOEBIUS_ERROR(BoundExceeded);
AMOEBIUS_ERROR(NotNormal);
AMOEBIUS_ERROR(NotInvariant);
AMOEBIUS_ERROR(NotAHomomorphism);
AMOEBIUS_ERROR(NotBijective);
AMOEBIUS_ERROR(NotAClosureMap);
AMOEBIUS_ERROR(LiftNotGenerating);
AMOEBIUS_ERROR(ImageNotInLattice);
AMOEBIUS_ERROR(InvalidArgument);
AMOEBIUS_ERROR(VersionMismatch);

#undef AMOEBIUS_ERROR

} // namespace amoebius
