#include "unbias/error.hpp"

namespace unbias {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::LetterOutOfRange: return "LetterOutOfRange";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NoReductionPossible: return "NoReductionPossible";
    case Errc::NoSuchIndex: return "NoSuchIndex";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::SourceTargetMismatch: return "SourceTargetMismatch";
    case Errc::NotLinear: return "NotLinear";
    case Errc::NotPermutationEquivalent: return "NotPermutationEquivalent";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidHom: return "InvalidHom";
    case Errc::UnassignedLabel: return "UnassignedLabel";
    case Errc::IllTyped: return "IllTyped";
    case Errc::BoundaryMismatch: return "BoundaryMismatch";
    case Errc::InvalidFunction: return "InvalidFunction";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::LiftEquationFails: return "LiftEquationFails";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::LabelOutOfRange: return "LabelOutOfRange";
    case Errc::NotPullbackSquare: return "NotPullbackSquare";
    case Errc::LaxLawViolation: return "LaxLawViolation";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::RecordFormatError: return "RecordFormatError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace unbias
