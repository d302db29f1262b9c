#pragma once

#include <stdexcept>
#include <string>

namespace circsign {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CIRCSIGN_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

// graph-core
CIRCSIGN_DEFINE_ERROR(LoopEdge);
CIRCSIGN_DEFINE_ERROR(VertexOutOfRange);

// signed-core
CIRCSIGN_DEFINE_ERROR(NotACycle);
CIRCSIGN_DEFINE_ERROR(RuleIncomplete);
CIRCSIGN_DEFINE_ERROR(NotATree);
CIRCSIGN_DEFINE_ERROR(NotBalanceable);
CIRCSIGN_DEFINE_ERROR(GraphMismatch);
CIRCSIGN_DEFINE_ERROR(InternalInvariantViolation);

// truemper
CIRCSIGN_DEFINE_ERROR(UnsupportedRule);

// circle-model / sigma-universal
CIRCSIGN_DEFINE_ERROR(DuplicatePoint);
CIRCSIGN_DEFINE_ERROR(WitnessSearchExhausted);
CIRCSIGN_DEFINE_ERROR(DegenerateConfiguration);
CIRCSIGN_DEFINE_ERROR(NotAdjacent);
CIRCSIGN_DEFINE_ERROR(NotIndependenceTwo);
CIRCSIGN_DEFINE_ERROR(InconsistentTriangle);
CIRCSIGN_DEFINE_ERROR(IndependentTriple);
CIRCSIGN_DEFINE_ERROR(HostMismatch);
CIRCSIGN_DEFINE_ERROR(ArithmeticOverflow);

// relalg
CIRCSIGN_DEFINE_ERROR(NotAssociative);
CIRCSIGN_DEFINE_ERROR(NotPeirceanClosed);
CIRCSIGN_DEFINE_ERROR(BadIdentity);
CIRCSIGN_DEFINE_ERROR(BadConverse);
CIRCSIGN_DEFINE_ERROR(NotAtomic);
CIRCSIGN_DEFINE_ERROR(IdOffDiagonal);
CIRCSIGN_DEFINE_ERROR(UnsupportedAlgebra);

// circular-chromatic
CIRCSIGN_DEFINE_ERROR(BadParameters);

// cli-io
CIRCSIGN_DEFINE_ERROR(ParseError);
CIRCSIGN_DEFINE_ERROR(ValidationError);

#undef CIRCSIGN_DEFINE_ERROR

}  // namespace circsign
