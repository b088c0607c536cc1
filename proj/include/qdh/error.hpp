#pragma once

#include <stdexcept>
#include <string>

namespace qdh {

enum class ErrorKind {
    InvalidArgument,
    InvalidBase,
    ZeroDivisor,
    Overflow,
    DivergentSeries,
    MaxTermsExceeded,
    NoConvergentRepresentation,
    UnknownFamily,
    IndexOutOfWindow,
    ZeroDenominator,
    BranchAmbiguous,
    PoleOnSupport,
    NonRealResult,
    FormalOnly,
    PoleHit,
    ResonantDelta,
    UnsupportedFamily,
    ScanTooCoarse,
    QuadratureNotConverged,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qdh
