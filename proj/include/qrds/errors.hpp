#pragma once

#include <stdexcept>
#include <string>

namespace qrds {

// Base class for every error raised by the engine. Verification failures are
// never reported through exceptions; they are data in a VerificationReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QRDS_DEFINE_ERROR(Name)         \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

QRDS_DEFINE_ERROR(InvertZero);
QRDS_DEFINE_ERROR(BadLength);
QRDS_DEFINE_ERROR(UnknownPair);
QRDS_DEFINE_ERROR(UnsupportedRho);
QRDS_DEFINE_ERROR(FormPairMismatch);
QRDS_DEFINE_ERROR(Beta0NotZero);
QRDS_DEFINE_ERROR(NoStabilization);
QRDS_DEFINE_ERROR(NonTerminating);
QRDS_DEFINE_ERROR(UnknownId);
QRDS_DEFINE_ERROR(UnsupportedField);

#undef QRDS_DEFINE_ERROR

}  // namespace qrds
