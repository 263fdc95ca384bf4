#ifndef TRIFOREST_ERROR_HPP
#define TRIFOREST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace triforest {

/// Machine-readable failure categories. Every exception thrown by the
/// library is an `Error` carrying one of these.
enum class ErrorCode {
    InvalidInput,
    InvalidG6,
    SizeLimitExceeded,
    PartialColoring,
    NotPlanar,
    UnknownFace,
    NotTriangulation,
    NotSeparating,
    NotAPath,
    NotACycle,
    NotCubic,
    NotFourConnected,
    PreconditionViolated,
    SearchExhausted,
    TimeBudgetExceeded,
    PrecoloringMismatch,
    InvalidPrecoloring,
    PropertyFailed,
    InternalError,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidG6: return "InvalidG6";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::UnknownFace: return "UnknownFace";
    case ErrorCode::NotTriangulation: return "NotTriangulation";
    case ErrorCode::NotSeparating: return "NotSeparating";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotFourConnected: return "NotFourConnected";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::TimeBudgetExceeded: return "TimeBudgetExceeded";
    case ErrorCode::PrecoloringMismatch: return "PrecoloringMismatch";
    case ErrorCode::InvalidPrecoloring: return "InvalidPrecoloring";
    case ErrorCode::PropertyFailed: return "PropertyFailed";
    case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// True for failures that signal a broken lemma or an implementation bug
/// rather than bad input.
inline constexpr bool is_internal(ErrorCode code) noexcept {
    return code == ErrorCode::SearchExhausted || code == ErrorCode::PrecoloringMismatch ||
           code == ErrorCode::InternalError;
}

}  // namespace triforest

#endif  // TRIFOREST_ERROR_HPP
