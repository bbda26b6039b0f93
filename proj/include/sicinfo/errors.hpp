#pragma once

#include <stdexcept>
#include <string>

namespace sicinfo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SICINFO_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

SICINFO_DEFINE_ERROR(InvalidOperator);
SICINFO_DEFINE_ERROR(NotPositive);
SICINFO_DEFINE_ERROR(InvalidState);
SICINFO_DEFINE_ERROR(InvalidEnsemble);
SICINFO_DEFINE_ERROR(InvalidPovm);
SICINFO_DEFINE_ERROR(NotSic);
SICINFO_DEFINE_ERROR(InvalidInput);
SICINFO_DEFINE_ERROR(DimMismatch);
SICINFO_DEFINE_ERROR(InvalidDistribution);
SICINFO_DEFINE_ERROR(InvalidDimension);
SICINFO_DEFINE_ERROR(ParseError);

#undef SICINFO_DEFINE_ERROR

}  // namespace sicinfo
