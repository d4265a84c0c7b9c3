#include "widdershins/error.hpp"

namespace widdershins {

#define WIDDERSHINS_DEFINE_ERROR(Name) \
  Name::Name(const std::string& what_arg) : Error(#Name ": " + what_arg) {}

WIDDERSHINS_DEFINE_ERROR(ParseError)
WIDDERSHINS_DEFINE_ERROR(InvalidPermutation)
WIDDERSHINS_DEFINE_ERROR(InvalidPointSet)
WIDDERSHINS_DEFINE_ERROR(EmptyPermutation)
WIDDERSHINS_DEFINE_ERROR(NotAntichain)
WIDDERSHINS_DEFINE_ERROR(DomainExceeded)
WIDDERSHINS_DEFINE_ERROR(UnknownLetter)
WIDDERSHINS_DEFINE_ERROR(SpiralTooShort)
WIDDERSHINS_DEFINE_ERROR(InvalidLetter)
WIDDERSHINS_DEFINE_ERROR(NotInW)
WIDDERSHINS_DEFINE_ERROR(TooLarge)
WIDDERSHINS_DEFINE_ERROR(TooSmall)
WIDDERSHINS_DEFINE_ERROR(PosetMismatch)
WIDDERSHINS_DEFINE_ERROR(CannotDelete)
WIDDERSHINS_DEFINE_ERROR(CacheError)

#undef WIDDERSHINS_DEFINE_ERROR

}  // namespace widdershins
