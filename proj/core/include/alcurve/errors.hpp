#pragma once

#include <stdexcept>
#include <string>

namespace alcurve {

// Base for all library errors. The CLI maps these to exit code 1, except
// IoError which maps to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ALCURVE_DEFINE_ERROR(Name)        \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// Curve construction and evaluation.
ALCURVE_DEFINE_ERROR(EmptyInput);
ALCURVE_DEFINE_ERROR(RaggedDesign);
ALCURVE_DEFINE_ERROR(OutOfRangePerformance);
ALCURVE_DEFINE_ERROR(OutOfDomain);
ALCURVE_DEFINE_ERROR(Unreachable);
ALCURVE_DEFINE_ERROR(DegenerateCeiling);

// Fitting.
ALCURVE_DEFINE_ERROR(InterceptInfeasible);
ALCURVE_DEFINE_ERROR(FitDiverged);

// Metrics.
ALCURVE_DEFINE_ERROR(NonPositiveScale);
ALCURVE_DEFINE_ERROR(NoOverlap);
ALCURVE_DEFINE_ERROR(TooFewIterations);
ALCURVE_DEFINE_ERROR(ZeroBaselineArea);
ALCURVE_DEFINE_ERROR(NonPositiveInput);

// Emulation.
ALCURVE_DEFINE_ERROR(BadFraction);
ALCURVE_DEFINE_ERROR(TooSmallClass);
ALCURVE_DEFINE_ERROR(QueryTooLarge);
ALCURVE_DEFINE_ERROR(ConfigInvalid);

// I/O.
ALCURVE_DEFINE_ERROR(ParseError);
ALCURVE_DEFINE_ERROR(MissingInitialPoint);
ALCURVE_DEFINE_ERROR(IoError);

#undef ALCURVE_DEFINE_ERROR

}  // namespace alcurve
