#pragma once

#include <stdexcept>
#include <string>

namespace algpencil {

// Error codes double as the CLI exit-code contract:
// parse errors -> 1, property violations -> 2, degenerate pencil -> 3,
// unsupported input -> 4.
enum class ErrorCode {
    NonSquare,
    ZeroPolynomial,
    ZeroForm,
    SingularMatrix,
    DimensionMismatch,
    UnknownName,
    NotBracketClosed,
    DegeneratePencil,
    BadShift,
    InvalidAlpha,
    SingularPairing,
    MissingBlock,
    WrongDimension,
    NotAssociative,
    NoUnity,
    NotIndexOne,
    Unsupported,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    const char* code_name() const {
        switch (code_) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ZeroForm: return "ZeroForm";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::NotBracketClosed: return "NotBracketClosed";
        case ErrorCode::DegeneratePencil: return "DegeneratePencil";
        case ErrorCode::BadShift: return "BadShift";
        case ErrorCode::InvalidAlpha: return "InvalidAlpha";
        case ErrorCode::SingularPairing: return "SingularPairing";
        case ErrorCode::MissingBlock: return "MissingBlock";
        case ErrorCode::WrongDimension: return "WrongDimension";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NoUnity: return "NoUnity";
        case ErrorCode::NotIndexOne: return "NotIndexOne";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::ParseError: return "ParseError";
        }
        return "Unknown";
    }

private:
    ErrorCode code_;
};

}  // namespace algpencil
