#include "qdh/error.hpp"

namespace qdh {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DivergentSeries: return "DivergentSeries";
    case ErrorKind::MaxTermsExceeded: return "MaxTermsExceeded";
    case ErrorKind::NoConvergentRepresentation: return "NoConvergentRepresentation";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::IndexOutOfWindow: return "IndexOutOfWindow";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::BranchAmbiguous: return "BranchAmbiguous";
    case ErrorKind::PoleOnSupport: return "PoleOnSupport";
    case ErrorKind::NonRealResult: return "NonRealResult";
    case ErrorKind::FormalOnly: return "FormalOnly";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::ResonantDelta: return "ResonantDelta";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::ScanTooCoarse: return "ScanTooCoarse";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    }
    return "Unknown";
}

} // namespace qdh
