#include "wesym/error.hpp"

namespace wesym {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::RaggedRows: return "RaggedRows";
    case Errc::UnknownName: return "UnknownName";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonIntegerResult: return "NonIntegerResult";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::ClosureFailure: return "ClosureFailure";
    case Errc::NotBlichfeldt: return "NotBlichfeldt";
    case Errc::DegenerateTuple: return "DegenerateTuple";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ContradictsLemma: return "ContradictsLemma";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace wesym
