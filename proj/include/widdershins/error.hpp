#pragma once

#include <stdexcept>
#include <string>

namespace widdershins {

/// Base of every error raised by this library. The concrete subclasses
/// name the failed precondition so callers (and the CLI) can branch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WIDDERSHINS_DECLARE_ERROR(Name)              \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what_arg);      \
  }

WIDDERSHINS_DECLARE_ERROR(ParseError);
WIDDERSHINS_DECLARE_ERROR(InvalidPermutation);
WIDDERSHINS_DECLARE_ERROR(InvalidPointSet);
WIDDERSHINS_DECLARE_ERROR(EmptyPermutation);
WIDDERSHINS_DECLARE_ERROR(NotAntichain);
WIDDERSHINS_DECLARE_ERROR(DomainExceeded);
WIDDERSHINS_DECLARE_ERROR(UnknownLetter);
WIDDERSHINS_DECLARE_ERROR(SpiralTooShort);
WIDDERSHINS_DECLARE_ERROR(InvalidLetter);
WIDDERSHINS_DECLARE_ERROR(NotInW);
WIDDERSHINS_DECLARE_ERROR(TooLarge);
WIDDERSHINS_DECLARE_ERROR(TooSmall);
WIDDERSHINS_DECLARE_ERROR(PosetMismatch);
WIDDERSHINS_DECLARE_ERROR(CannotDelete);
WIDDERSHINS_DECLARE_ERROR(CacheError);

#undef WIDDERSHINS_DECLARE_ERROR

}  // namespace widdershins
