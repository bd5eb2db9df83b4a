#pragma once

#include <stdexcept>
#include <string>

namespace barnette {

enum class Err {
    NonSimple,
    NotSymmetric,
    NotConnected,
    NotPlanarEmbedding,
    DualNotSimple,
    InducedCycleViolation,
    NotThreeColourable,
    NoAllDegree4Class,
    InvalidAlphaTriple,
    NotAPath,
    CenterIsRed,
    SeedConflict,
    DistanceViolation,
    ExtensionFailure,
    NotClosedInput,
    DegreeViolation,
    NotHamiltonian,
    CapExceeded,
    PipelineFailure,
    NotThreeConnected,
    ParseError,
    Precondition,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Err code;
    Error(Err c, const std::string& what)
        : std::runtime_error(std::string(err_name(c)) + ": " + what), code(c) {}
};

} // namespace barnette
