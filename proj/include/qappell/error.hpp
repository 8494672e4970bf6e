#pragma once

#include <stdexcept>
#include <string>

namespace qappell {

// Stable error codes; mirrored one-to-one by the C API status values.
enum class ErrorCode {
    InvalidArgument,
    ParseError,
    InvalidQ,                 // q in {0, 1, -1}
    DivisionByZero,
    ZeroLeadingCoefficient,   // a_0 = 0
    DegenerateSum,            // a_0(f) + a_0(g) = 0
    NonUnitConstantTerm,      // series reciprocal of a non-unit
    InsufficientCoefficients, // polynomial(n) requested beyond stored order
    OrderMismatch,            // series arithmetic with different truncation orders
    ZeroBeta,
    ZeroLambda,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::ParseError: return "parse-error";
        case ErrorCode::InvalidQ: return "invalid-q";
        case ErrorCode::DivisionByZero: return "division-by-zero";
        case ErrorCode::ZeroLeadingCoefficient: return "zero-leading-coefficient";
        case ErrorCode::DegenerateSum: return "degenerate-sum";
        case ErrorCode::NonUnitConstantTerm: return "non-unit-constant-term";
        case ErrorCode::InsufficientCoefficients: return "insufficient-coefficients";
        case ErrorCode::OrderMismatch: return "order-mismatch";
        case ErrorCode::ZeroBeta: return "zero-beta";
        case ErrorCode::ZeroLambda: return "zero-lambda";
    }
    return "unknown";
}

} // namespace qappell
