#pragma once

#include <stdexcept>
#include <string>

namespace credal {

/// Stable machine-readable codes, also used by the CLI diagnostic stream.
enum class ErrorCode {
    dimension_mismatch,
    scope_mismatch,
    scopes_overlap,
    empty_set,
    unbounded_set,
    not_absolutely_continuous,
    empty_fiber,
    parse_error,
    invariant_violation,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::dimension_mismatch: return "DIMENSION";
        case ErrorCode::scope_mismatch: return "SCOPE";
        case ErrorCode::scopes_overlap: return "OVERLAP";
        case ErrorCode::empty_set: return "EMPTY";
        case ErrorCode::unbounded_set: return "UNBOUNDED";
        case ErrorCode::not_absolutely_continuous: return "NOT_ABS_CONT";
        case ErrorCode::empty_fiber: return "EMPTY_FIBER";
        case ErrorCode::parse_error: return "PARSE";
        case ErrorCode::invariant_violation: return "INVARIANT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& msg)
        : Error(ErrorCode::dimension_mismatch, msg) {}
};

struct ScopeMismatchError : Error {
    explicit ScopeMismatchError(const std::string& msg) : Error(ErrorCode::scope_mismatch, msg) {}
};

/// Disjoint scopes were required (strong products) but the scopes share a variable.
struct ScopesOverlapError : Error {
    explicit ScopesOverlapError(const std::string& msg) : Error(ErrorCode::scopes_overlap, msg) {}
};

/// The described set is empty where a nonempty one is required.
struct EmptySetError : Error {
    explicit EmptySetError(const std::string& msg) : Error(ErrorCode::empty_set, msg) {}
};

/// The described set admits a recession direction; vertex enumeration is refused.
struct UnboundedError : Error {
    explicit UnboundedError(const std::string& msg) : Error(ErrorCode::unbounded_set, msg) {}
};

struct NotAbsolutelyContinuousError : Error {
    explicit NotAbsolutelyContinuousError(const std::string& msg)
        : Error(ErrorCode::not_absolutely_continuous, msg) {}
};

struct EmptyFiberError : Error {
    explicit EmptyFiberError(const std::string& msg) : Error(ErrorCode::empty_fiber, msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(ErrorCode::parse_error, msg) {}
};

struct InvariantViolationError : Error {
    explicit InvariantViolationError(const std::string& msg)
        : Error(ErrorCode::invariant_violation, msg) {}
};

}  // namespace credal
