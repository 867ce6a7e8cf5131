#pragma once

#include <stdexcept>
#include <string>

namespace unbias {

enum class Errc {
  LetterOutOfRange,
  NotReduced,
  NoReductionPossible,
  NoSuchIndex,
  InvalidPermutation,
  PositionOutOfRange,
  SourceTargetMismatch,
  NotLinear,
  NotPermutationEquivalent,
  IndexOutOfRange,
  InvalidHom,
  UnassignedLabel,
  IllTyped,
  BoundaryMismatch,
  InvalidFunction,
  TargetMismatch,
  LiftEquationFails,
  NotInvertible,
  LabelOutOfRange,
  NotPullbackSquare,
  LaxLawViolation,
  SyntaxError,
  RecordFormatError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace unbias
