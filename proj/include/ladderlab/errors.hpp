#pragma once

#include <stdexcept>
#include <string>

namespace ladderlab {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LADDERLAB_DEFINE_ERROR(Name)              \
  class Name : public error {                     \
   public:                                        \
    using error::error;                           \
  }

LADDERLAB_DEFINE_ERROR(HeightTooLow);
LADDERLAB_DEFINE_ERROR(HeightAboveCache);
LADDERLAB_DEFINE_ERROR(OutOfRange);
LADDERLAB_DEFINE_ERROR(OverlapDetected);
LADDERLAB_DEFINE_ERROR(NotSeparated);
LADDERLAB_DEFINE_ERROR(RangeTooLarge);
LADDERLAB_DEFINE_ERROR(NoConvergence);
LADDERLAB_DEFINE_ERROR(TargetOutsideRange);
LADDERLAB_DEFINE_ERROR(NotBracketed);
LADDERLAB_DEFINE_ERROR(BadU);
LADDERLAB_DEFINE_ERROR(TransportViolation);
LADDERLAB_DEFINE_ERROR(ZeroDenominator);
LADDERLAB_DEFINE_ERROR(MismatchedParams);
LADDERLAB_DEFINE_ERROR(PointOutsideSet);
LADDERLAB_DEFINE_ERROR(RhsNearZero);
LADDERLAB_DEFINE_ERROR(UnequalK);
LADDERLAB_DEFINE_ERROR(EqualDeltas);
LADDERLAB_DEFINE_ERROR(BadConfig);
LADDERLAB_DEFINE_ERROR(CacheFormatError);

#undef LADDERLAB_DEFINE_ERROR

}  // namespace ladderlab
