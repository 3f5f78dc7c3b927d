#include "wres/error.hpp"

namespace wres {

const char* errorTag(ErrorKind k) {
    switch (k) {
    case ErrorKind::RingMismatch: return "RING-MISMATCH";
    case ErrorKind::NotSmooth: return "NOT-SMOOTH";
    case ErrorKind::NotPureDimensional: return "NOT-PURE-DIMENSIONAL";
    case ErrorKind::NotCoprime: return "NOT-COPRIME";
    case ErrorKind::PartitionFailure: return "PARTITION-FAILURE";
    case ErrorKind::PreconditionViolation: return "PRECONDITION-VIOLATION";
    case ErrorKind::NonterminationGuard: return "NONTERMINATION-GUARD";
    case ErrorKind::NotRegularParameters: return "NOT-REGULAR-PARAMETERS";
    case ErrorKind::ArityMismatch: return "ARITY-MISMATCH";
    case ErrorKind::InvariantViolation: return "INVARIANT-VIOLATION";
    case ErrorKind::StepLimit: return "STEP-LIMIT";
    case ErrorKind::WorkLimit: return "WORK-LIMIT";
    case ErrorKind::Timeout: return "TIMEOUT";
    case ErrorKind::ParseError: return "PARSE-ERROR";
    case ErrorKind::UnknownVariable: return "UNKNOWN-VARIABLE";
    }
    return "ERROR";
}

} // namespace wres
