#pragma once

#include <stdexcept>
#include <string>

namespace orbconf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ORBCONF_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

// exact arithmetic
ORBCONF_DEFINE_ERROR(OrderMismatchError);
ORBCONF_DEFINE_ERROR(DivisionByZeroError);
ORBCONF_DEFINE_ERROR(InvalidOrderError);
ORBCONF_DEFINE_ERROR(ParseError);
ORBCONF_DEFINE_ERROR(ExactnessError);

// orbifolds, actions and configuration spaces
ORBCONF_DEFINE_ERROR(InvalidOrbifoldError);
ORBCONF_DEFINE_ERROR(ReflectorError);
ORBCONF_DEFINE_ERROR(UnsupportedActionError);
ORBCONF_DEFINE_ERROR(DomainError);
ORBCONF_DEFINE_ERROR(MembershipError);
ORBCONF_DEFINE_ERROR(ArityError);
ORBCONF_DEFINE_ERROR(SamplingExhaustedError);

// arrangements
ORBCONF_DEFINE_ERROR(NotRealError);
ORBCONF_DEFINE_ERROR(SizeError);
ORBCONF_DEFINE_ERROR(CentralityError);
ORBCONF_DEFINE_ERROR(BadPrimeError);

// obstruction
ORBCONF_DEFINE_ERROR(NoWitnessError);

// groupoids
ORBCONF_DEFINE_ERROR(ActionError);
ORBCONF_DEFINE_ERROR(InvalidModelError);

#undef ORBCONF_DEFINE_ERROR

}  // namespace orbconf
