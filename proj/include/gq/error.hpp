#pragma once

#include <stdexcept>
#include <string>

namespace gq {

enum class ErrorCode {
    DuplicateName,
    NegativeDegree,
    AlgebraMismatch,
    Inhomogeneous,
    DegreeMismatch,
    EvenDegree,
    NotNilpotent,
    NotLocallyNilpotent,
    NotClosed,
    NotAffineBase,
    ConstantObstruction,
    NotSymmetric,
    NotBasic,
    NotClosedInternal,
    NotVertical,
    NotIdeal,
    NotSplitting,
    NotHomogeneous,
    SingularPairing,
    NotCompatible,
    MasterEquationFailed,
    BaseNotTangent,
    NotHomomorphism,
    ConjugationFailed,
    NotInvariant,
    NotEquivariantlyClosed,
    UnknownName,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace gq
