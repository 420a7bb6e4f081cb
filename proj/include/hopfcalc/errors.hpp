#pragma once

#include <stdexcept>
#include <string>

namespace hopfcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HOPFCALC_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

HOPFCALC_DEFINE_ERROR(DivisionByZero);
HOPFCALC_DEFINE_ERROR(ConductorTooLarge);
HOPFCALC_DEFINE_ERROR(InvalidGroup);
HOPFCALC_DEFINE_ERROR(NotAutomorphismAction);
HOPFCALC_DEFINE_ERROR(NotAbelian);
HOPFCALC_DEFINE_ERROR(NotNormal);
HOPFCALC_DEFINE_ERROR(NotAbelianSubgroup);
HOPFCALC_DEFINE_ERROR(AmbiguousDegrees);
HOPFCALC_DEFINE_ERROR(InvalidBicharacter);
HOPFCALC_DEFINE_ERROR(UnsupportedGroup);
HOPFCALC_DEFINE_ERROR(InvalidDatum);
HOPFCALC_DEFINE_ERROR(InvalidSignature);
HOPFCALC_DEFINE_ERROR(InconsistentOrbitData);
HOPFCALC_DEFINE_ERROR(SearchBoundExceeded);
HOPFCALC_DEFINE_ERROR(NoSolution);
HOPFCALC_DEFINE_ERROR(InvalidHopfData);
HOPFCALC_DEFINE_ERROR(GeneratorsDoNotSpan);
HOPFCALC_DEFINE_ERROR(CandidateOutsideField);
HOPFCALC_DEFINE_ERROR(TwistInvalid);
HOPFCALC_DEFINE_ERROR(ParseError);

#undef HOPFCALC_DEFINE_ERROR

}  // namespace hopfcalc
