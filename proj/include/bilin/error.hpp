#pragma once

#include <stdexcept>
#include <string>

namespace bilin {

enum class ErrorCode {
    NotAPrimePower,
    OutOfRange,
    DivisionByZero,
    ZeroArgument,
    DimensionMismatch,
    BudgetExceeded,
    NotSymmetric,
    Degenerate,
    NotSelfOrthogonal,
    PreconditionViolated,
    UnsupportedType,
    NonIntegralResult,
    InternalInconsistency,
    ResidueMismatch,
    ZeroCode,
    EmptyStratum,
    MaxRejectionsExceeded,
    ParseError,
};

const char* errorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(errorCodeName(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bilin
