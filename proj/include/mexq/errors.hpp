#pragma once

#include <stdexcept>
#include <string>

namespace mexq {

// Base of every error raised by the library. Each named failure mode gets its
// own type so callers (and the CLI exit-code mapping) can tell them apart.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MEXQ_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

MEXQ_DEFINE_ERROR(InvalidArgument);
MEXQ_DEFINE_ERROR(NonUnitLeadingCoefficient);
MEXQ_DEFINE_ERROR(BadModulus);
MEXQ_DEFINE_ERROR(OutOfPrecision);
MEXQ_DEFINE_ERROR(InsufficientPrecision);
MEXQ_DEFINE_ERROR(RangeTooLarge);
MEXQ_DEFINE_ERROR(FractionalExponent);
MEXQ_DEFINE_ERROR(HalfIntegralWeight);
MEXQ_DEFINE_ERROR(BadPrime);
MEXQ_DEFINE_ERROR(BadInstance);
MEXQ_DEFINE_ERROR(WitnessNotFound);

#undef MEXQ_DEFINE_ERROR

} // namespace mexq
