#pragma once

#include <stdexcept>
#include <string>

namespace qcms {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands built over different signatures, or a malformed signature.
struct SignatureError : Error {
  using Error::Error;
};

// Substitution image violates generator parity.
struct ParityError : Error {
  using Error::Error;
};

// Degree constraint violated (splits, query balance, grading).
struct DegreeError : Error {
  using Error::Error;
};

// Ideal degree cap too small for the request, or mismatched between ideals.
struct CapError : Error {
  using Error::Error;
};

// An internal self-check failed (fullness, basis uniqueness, cross-check).
struct VerificationError : Error {
  using Error::Error;
};

// Cache file unreadable, corrupt, or inconsistent with the request.
struct CacheError : Error {
  using Error::Error;
};

// Value outside the supported domain (genus range, index range).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace qcms
