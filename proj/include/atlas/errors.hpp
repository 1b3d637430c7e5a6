#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

// Exit codes used by the CLI; every library error carries one.
enum class errc {
    parse = 2,      // malformed input / precondition violation
    weil = 3,       // Weil-polynomial validation failure
    precision = 4,  // precision exhausted after adaptive retries
    internal = 5,   // broken internal invariant (never expected)
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

#define ATLAS_DEFINE_ERROR(Name, Code)                                    \
    class Name : public error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : error(Code, what) {}     \
    }

ATLAS_DEFINE_ERROR(NotCoprime, errc::parse);
ATLAS_DEFINE_ERROR(PrecisionExhausted, errc::precision);
ATLAS_DEFINE_ERROR(NotDominated, errc::parse);
ATLAS_DEFINE_ERROR(NotNilpotent, errc::parse);
ATLAS_DEFINE_ERROR(NotIrreducible, errc::parse);
ATLAS_DEFINE_ERROR(NotPolynomial, errc::parse);
ATLAS_DEFINE_ERROR(SingularPresentation, errc::parse);
ATLAS_DEFINE_ERROR(DimensionMismatch, errc::parse);
ATLAS_DEFINE_ERROR(FunctionalEquationViolated, errc::weil);
ATLAS_DEFINE_ERROR(RootModulusSuspect, errc::weil);
ATLAS_DEFINE_ERROR(NotPrimePower, errc::weil);
ATLAS_DEFINE_ERROR(EllEqualsP, errc::parse);
ATLAS_DEFINE_ERROR(NotSquarefree, errc::parse);
ATLAS_DEFINE_ERROR(ZeroConstantTerm, errc::parse);
ATLAS_DEFINE_ERROR(UnpairedFactor, errc::internal);
ATLAS_DEFINE_ERROR(BadBVector, errc::parse);
ATLAS_DEFINE_ERROR(CharacteristicTwo, errc::parse);
ATLAS_DEFINE_ERROR(WrongDegree, errc::parse);
ATLAS_DEFINE_ERROR(InternalError, errc::internal);

#undef ATLAS_DEFINE_ERROR

// Assertion for invariants that the algorithms themselves guarantee.
inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

}  // namespace atlas
