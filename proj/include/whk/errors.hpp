#pragma once

#include <stdexcept>
#include <string>

namespace whk {

/// Base class for all errors raised by the kernel. Check failures are not
/// errors; they are reported with witnesses. Errors signal operational
/// problems: bad shapes, unsupported inputs, resource guards.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension or index mismatch between values that must agree.
struct ShapeError : Error {
  using Error::Error;
};

/// An idempotent or grouplike enumeration needed a root that is not
/// rational; the computation cannot be completed over the rationals.
struct NotSplitError : Error {
  using Error::Error;
};

/// A combinatorial enumeration would exceed its configured bound.
struct GuardError : Error {
  using Error::Error;
};

/// Definition-file syntax or reference problem.
struct ParseError : Error {
  using Error::Error;
};

/// Truncated polynomial carrier handed a generator that does not preserve
/// the grading, so its lift to the truncation is not defined.
struct GradeError : Error {
  using Error::Error;
};

/// A consistency condition that valid inputs cannot violate failed anyway;
/// indicates a bug in the kernel or corrupted input, never a check failure.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace whk
