#include "bisect/errors.hpp"

namespace bisect {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::MalformedStructure: return "MalformedStructure";
        case ErrorKind::NotPerfect: return "NotPerfect";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::ImproperColoring: return "ImproperColoring";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::InvalidFamily: return "InvalidFamily";
        case ErrorKind::TooManyEdges: return "TooManyEdges";
        case ErrorKind::InitializationExhausted: return "InitializationExhausted";
        case ErrorKind::StructureAssertionFailed: return "StructureAssertionFailed";
        case ErrorKind::UnhandledChordPattern: return "UnhandledChordPattern";
        case ErrorKind::AssertionFailed: return "AssertionFailed";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ClawInput: return "ClawInput";
        case ErrorKind::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    }
    return "UnknownError";
}

}  // namespace bisect
