#pragma once

#include <stdexcept>
#include <string>

namespace qcv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation hit a zero of the (cancelled) denominator.
struct PoleError : Error {
    using Error::Error;
};

struct ContextMismatch : Error {
    using Error::Error;
};

struct SkewIncompatible : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

struct NonNilpotentArgument : Error {
    using Error::Error;
};

struct NotNilpotent : Error {
    using Error::Error;
};

struct RelationCheckFailed : Error {
    using Error::Error;
};

struct NonHalfIntegerEntry : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct RingMismatch : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

} // namespace qcv
