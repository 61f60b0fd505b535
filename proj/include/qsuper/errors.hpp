#pragma once

#include <stdexcept>
#include <string>

namespace qsuper {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QSUPER_DEFINE_ERROR(Name)      \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  };

QSUPER_DEFINE_ERROR(ParseError)
QSUPER_DEFINE_ERROR(UnknownSymbol)
QSUPER_DEFINE_ERROR(SignatureError)
QSUPER_DEFINE_ERROR(PoleAtLimit)
QSUPER_DEFINE_ERROR(MissingImage)
QSUPER_DEFINE_ERROR(NotInvolutive)
QSUPER_DEFINE_ERROR(UnknownGenerator)
QSUPER_DEFINE_ERROR(UnknownPreset)
QSUPER_DEFINE_ERROR(TerminationError)
QSUPER_DEFINE_ERROR(NonOrientableRelation)
QSUPER_DEFINE_ERROR(Singular)
QSUPER_DEFINE_ERROR(DimensionMismatch)
QSUPER_DEFINE_ERROR(NonQuadraticRelation)
QSUPER_DEFINE_ERROR(NonInvertibleBasisChange)
QSUPER_DEFINE_ERROR(ConstraintUnsatisfied)
QSUPER_DEFINE_ERROR(TruncationTooSmall)
QSUPER_DEFINE_ERROR(FixtureMissing)
QSUPER_DEFINE_ERROR(FixtureCorrupt)

#undef QSUPER_DEFINE_ERROR

}  // namespace qsuper
