#include "opvframe/errors.hpp"

namespace opv {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NotIsometry: return "NotIsometry";
    case Errc::DegenerateComplement: return "DegenerateComplement";
    case Errc::SingularOrIndefinite: return "SingularOrIndefinite";
    case Errc::MajorizationViolated: return "MajorizationViolated";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InvalidDimension: return "InvalidDimension";
    case Errc::NotAFrame: return "NotAFrame";
    case Errc::NotParseval: return "NotParseval";
    case Errc::NotAProjection: return "NotAProjection";
    case Errc::InsufficientCodomain: return "InsufficientCodomain";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::InsufficientRows: return "InsufficientRows";
    case Errc::TraceMismatch: return "TraceMismatch";
    case Errc::Infeasible: return "Infeasible";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::SubsetLimitExceeded: return "SubsetLimitExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::VersionUnsupported: return "VersionUnsupported";
    case Errc::ShapeMismatch: return "ShapeMismatch";
  }
  return "UnknownError";
}

}  // namespace opv
