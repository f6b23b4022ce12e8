#pragma once

#include <stdexcept>
#include <string>

namespace jacstrata {

enum class ErrorCode {
    EmptyGenerators,
    NonCoprime,
    NotStable,
    OutOfRange,
    WrongCodim,
    WrongCurveType,
    IndexOutOfRange,
    SyntaxError,
    NotAUnit,
    RankDrop,
    TooLarge,
    Precondition,
    ArithmeticOverflow,
    Internal,
};

/// Domain error carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    const char* code_name() const {
        switch (code_) {
            case ErrorCode::EmptyGenerators: return "EmptyGenerators";
            case ErrorCode::NonCoprime: return "NonCoprime";
            case ErrorCode::NotStable: return "NotStable";
            case ErrorCode::OutOfRange: return "OutOfRange";
            case ErrorCode::WrongCodim: return "WrongCodim";
            case ErrorCode::WrongCurveType: return "WrongCurveType";
            case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
            case ErrorCode::SyntaxError: return "SyntaxError";
            case ErrorCode::NotAUnit: return "NotAUnit";
            case ErrorCode::RankDrop: return "RankDrop";
            case ErrorCode::TooLarge: return "TooLarge";
            case ErrorCode::Precondition: return "Precondition";
            case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
            case ErrorCode::Internal: return "Internal";
        }
        return "Unknown";
    }

private:
    ErrorCode code_;
};

}  // namespace jacstrata
