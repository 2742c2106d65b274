#include "pckit/error.hpp"

namespace pckit {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonUnit: return "NonUnit";
    case Err::ZeroResidue: return "ZeroResidue";
    case Err::NonInvertible: return "NonInvertible";
    case Err::CharTwoOrthogonal: return "CharTwoOrthogonal";
    case Err::NotSimilitudeGroup: return "NotSimilitudeGroup";
    case Err::RankMismatch: return "RankMismatch";
    case Err::MembershipViolation: return "MembershipViolation";
    case Err::IncompatibleContexts: return "IncompatibleContexts";
    case Err::NotInKernel: return "NotInKernel";
    case Err::WrongKind: return "WrongKind";
    case Err::UnsupportedOperands: return "UnsupportedOperands";
    case Err::NoWitness: return "NoWitness";
    case Err::UnknownEmbedding: return "UnknownEmbedding";
    case Err::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NotSemisimple: return "NotSemisimple";
    case Err::UnsupportedFlavor: return "UnsupportedFlavor";
    case Err::NonInvertibleSlot: return "NonInvertibleSlot";
    case Err::CharTwo: return "CharTwo";
    case Err::ParseError: return "ParseError";
    case Err::SchemaError: return "SchemaError";
    case Err::NotAHomomorphism: return "NotAHomomorphism";
    case Err::ClosureCapExceeded: return "ClosureCapExceeded";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace pckit
