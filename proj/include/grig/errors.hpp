#pragma once

#include <stdexcept>
#include <string>

namespace grig {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 1 (domain error).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidCharacter : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A requested depth, level or radius is beyond the configured cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// The word-problem recursion used more calls than its budget. Contraction
/// guarantees termination, so this indicates a bug rather than a hard input.
class RecursionBudgetExceeded : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class DepthMismatch : public Error {
public:
    using Error::Error;
};

class NotARelator : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

} // namespace grig
