#pragma once
#include <stdexcept>
#include <string>

namespace bisect {

enum class ErrorKind {
    ParseError,
    MalformedStructure,
    NotPerfect,
    NotSimple,
    ImproperColoring,
    PreconditionViolated,
    InvalidFamily,
    TooManyEdges,
    InitializationExhausted,
    StructureAssertionFailed,
    UnhandledChordPattern,
    AssertionFailed,  // a proven bound failed to hold: implementation bug
    BudgetExceeded,
    ClawInput,
    RejectionBudgetExceeded,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace bisect
