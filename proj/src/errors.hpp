#pragma once

#include <stdexcept>
#include <string>

namespace fpmcert {

// Error codes shared with the C API (see include/fpmcert.h).
enum class ErrorCode : int {
    Ok = 0,
    InputError = 2,    // bad config, schema violation, invalid parameters
    InternalError = 3, // precision exhaustion, unsupported structure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), code_(code), kind_(std::move(kind)) {}
    ErrorCode code() const { return code_; }
    const std::string& kind() const { return kind_; }

private:
    ErrorCode code_;
    std::string kind_;
};

#define FPMCERT_ERROR(NAME, CODE)                                                 \
    class NAME : public Error {                                                   \
    public:                                                                       \
        explicit NAME(const std::string& msg) : Error(CODE, #NAME, msg) {}        \
    }

FPMCERT_ERROR(InvalidPrime, ErrorCode::InputError);
FPMCERT_ERROR(NotSplit, ErrorCode::InputError);
FPMCERT_ERROR(DenominatorAtP, ErrorCode::InputError);
FPMCERT_ERROR(PrecisionExhausted, ErrorCode::InternalError);
FPMCERT_ERROR(ZeroPolynomial, ErrorCode::InputError);
FPMCERT_ERROR(NotWeil, ErrorCode::InputError);
FPMCERT_ERROR(NotStable, ErrorCode::InputError);
FPMCERT_ERROR(NonIntegerCharPoly, ErrorCode::InputError);
FPMCERT_ERROR(NotSemisimple, ErrorCode::InputError);
FPMCERT_ERROR(FactorizationUnsupported, ErrorCode::InternalError);
FPMCERT_ERROR(NotSubobject, ErrorCode::InputError);
FPMCERT_ERROR(NotAdmissible, ErrorCode::InputError);
FPMCERT_ERROR(GridExhausted, ErrorCode::InternalError);
FPMCERT_ERROR(ParseError, ErrorCode::InputError);
FPMCERT_ERROR(SchemaError, ErrorCode::InputError);
FPMCERT_ERROR(ArithmeticError, ErrorCode::InputError);
FPMCERT_ERROR(NotSupersingularFactor, ErrorCode::InputError);
FPMCERT_ERROR(EqualCoefficients, ErrorCode::InputError);
FPMCERT_ERROR(IoError, ErrorCode::InternalError);

#undef FPMCERT_ERROR

} // namespace fpmcert
