#pragma once

#include <stdexcept>
#include <string>

namespace wres {

enum class ErrorKind {
    RingMismatch,
    NotSmooth,
    NotPureDimensional,
    NotCoprime,
    PartitionFailure,
    PreconditionViolation,
    NonterminationGuard,
    NotRegularParameters,
    ArityMismatch,
    InvariantViolation,
    StepLimit,
    WorkLimit,
    Timeout,
    ParseError,
    UnknownVariable,
};

// Stable machine-readable tag, e.g. "NOT-SMOOTH".
const char* errorTag(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace wres
