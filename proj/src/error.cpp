#include "bilin/error.hpp"

namespace bilin {

const char* errorCodeName(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotAPrimePower: return "NotAPrimePower";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroArgument: return "ZeroArgument";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotSelfOrthogonal: return "NotSelfOrthogonal";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::UnsupportedType: return "UnsupportedType";
        case ErrorCode::NonIntegralResult: return "NonIntegralResult";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::ResidueMismatch: return "ResidueMismatch";
        case ErrorCode::ZeroCode: return "ZeroCode";
        case ErrorCode::EmptyStratum: return "EmptyStratum";
        case ErrorCode::MaxRejectionsExceeded: return "MaxRejectionsExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace bilin
