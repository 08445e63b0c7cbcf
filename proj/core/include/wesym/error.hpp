#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wesym {

enum class Errc {
  NotPrime,
  FieldTooLarge,
  DivisionByZero,
  RankDeficient,
  RaggedRows,
  UnknownName,
  FieldMismatch,
  TooLarge,
  NonIntegerResult,
  SingularMatrix,
  PrecisionExhausted,
  ClosureFailure,
  NotBlichfeldt,
  DegenerateTuple,
  DegreeMismatch,
  ContradictsLemma,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure in the library is reported through this type; code() carries
// the machine-readable kind so callers (and the CLI exit-code mapping) can
// branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wesym
