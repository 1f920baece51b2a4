#pragma once

#include <stdexcept>
#include <string>

namespace linec4 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LINEC4_DEFINE_ERROR(Name)             \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

// multigraph
LINEC4_DEFINE_ERROR(UnderflowError);
LINEC4_DEFINE_ERROR(UnknownVertexError);
LINEC4_DEFINE_ERROR(NonInjectiveError);
LINEC4_DEFINE_ERROR(DuplicateVertexError);
LINEC4_DEFINE_ERROR(InvalidCycleError);

// feasibility
LINEC4_DEFINE_ERROR(OutOfTheoremScope);
LINEC4_DEFINE_ERROR(NotFeasibleError);
LINEC4_DEFINE_ERROR(FeasibleParamsError);

// blocks and pipeline
LINEC4_DEFINE_ERROR(EvenOrderError);
LINEC4_DEFINE_ERROR(EvenOrValueError);
LINEC4_DEFINE_ERROR(InfeasibleBlockError);
LINEC4_DEFINE_ERROR(BudgetExceededError);
LINEC4_DEFINE_ERROR(InternalVerificationError);
LINEC4_DEFINE_ERROR(PreconditionError);

// serialization
LINEC4_DEFINE_ERROR(DocumentError);

// command line
LINEC4_DEFINE_ERROR(UsageError);

#undef LINEC4_DEFINE_ERROR

}  // namespace linec4
