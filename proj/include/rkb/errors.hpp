#pragma once

#include <stdexcept>
#include <string>

namespace rkb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RKB_DEFINE_ERROR(Name)        \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  };

RKB_DEFINE_ERROR(DomainError)
RKB_DEFINE_ERROR(BranchError)
RKB_DEFINE_ERROR(DivisionError)
RKB_DEFINE_ERROR(OverflowError)
RKB_DEFINE_ERROR(DegenerateError)
RKB_DEFINE_ERROR(EvaluationError)
RKB_DEFINE_ERROR(IllConditioned)
RKB_DEFINE_ERROR(ConvergenceError)
RKB_DEFINE_ERROR(PoleError)
RKB_DEFINE_ERROR(NotApproaching)
RKB_DEFINE_ERROR(NoMatch)
RKB_DEFINE_ERROR(StalledError)
RKB_DEFINE_ERROR(StencilError)
RKB_DEFINE_ERROR(InconclusiveError)
RKB_DEFINE_ERROR(PreconditionError)
RKB_DEFINE_ERROR(ParseError)

#undef RKB_DEFINE_ERROR

}  // namespace rkb
