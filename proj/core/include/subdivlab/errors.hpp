#pragma once

#include <stdexcept>
#include <string>

namespace subdivlab {

// Every failure raised by the library derives from Error. kind() is the
// stable machine-readable tag the CLI puts in its error JSON.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define SUBDIVLAB_DEFINE_ERROR(Name, tag)                        \
  class Name : public Error {                                     \
   public:                                                        \
    using Error::Error;                                           \
    const char* kind() const noexcept override { return tag; }    \
  };

// Bad arguments or malformed input data.
SUBDIVLAB_DEFINE_ERROR(InputError, "input")
// A search exhausted its node budget before reaching a verdict.
SUBDIVLAB_DEFINE_ERROR(BudgetError, "budget")
// A requested object would exceed a configured size limit.
SUBDIVLAB_DEFINE_ERROR(CapacityError, "capacity")
// Flooring emptied a set the procedure needs to be nonempty.
SUBDIVLAB_DEFINE_ERROR(DegenerateInputError, "degenerate")
// A formula was evaluated outside its domain.
SUBDIVLAB_DEFINE_ERROR(DomainError, "domain")
// An internal guarantee failed; indicates a bug or a false assumption.
SUBDIVLAB_DEFINE_ERROR(StructuralError, "structural")

#undef SUBDIVLAB_DEFINE_ERROR

}  // namespace subdivlab
