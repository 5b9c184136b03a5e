#pragma once

#include <stdexcept>
#include <string>

namespace zdtd {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ZDTD_DEFINE_ERROR(NAME)                                               \
    struct NAME : Error {                                                     \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {}    \
        static constexpr const char* kind = #NAME;                            \
    }

ZDTD_DEFINE_ERROR(DivisionByZero);
ZDTD_DEFINE_ERROR(FieldMismatch);
ZDTD_DEFINE_ERROR(ParseError);
ZDTD_DEFINE_ERROR(DimensionMismatch);
ZDTD_DEFINE_ERROR(SingularMatrix);
ZDTD_DEFINE_ERROR(ZeroDiagonalEntry);
ZDTD_DEFINE_ERROR(NotMultiplicityFree);
ZDTD_DEFINE_ERROR(EigenvalueMismatch);
ZDTD_DEFINE_ERROR(FieldExtensionRequired);
ZDTD_DEFINE_ERROR(DiameterTooSmall);
ZDTD_DEFINE_ERROR(DiameterMismatch);
ZDTD_DEFINE_ERROR(OddDiameter);
ZDTD_DEFINE_ERROR(NotConstant);
ZDTD_DEFINE_ERROR(ZeroScale);
ZDTD_DEFINE_ERROR(InadmissibleParams);
ZDTD_DEFINE_ERROR(DegenerateBasis);
ZDTD_DEFINE_ERROR(ZeroTraceDenominator);
ZDTD_DEFINE_ERROR(NotZeroDiagTD);
ZDTD_DEFINE_ERROR(NotLeonardPair);
ZDTD_DEFINE_ERROR(NotConstantAcrossI);
ZDTD_DEFINE_ERROR(RootOfUnityQ);
ZDTD_DEFINE_ERROR(IndexOutOfRange);

// Raised when an identity that must hold for every valid input fails to
// hold; indicates a bug or a violated precondition upstream.
ZDTD_DEFINE_ERROR(ConsistencyError);

#undef ZDTD_DEFINE_ERROR

} // namespace zdtd
