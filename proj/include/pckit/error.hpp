#pragma once

#include <stdexcept>
#include <string>

namespace pckit {

enum class Err {
  NonUnit,
  ZeroResidue,
  NonInvertible,
  CharTwoOrthogonal,
  NotSimilitudeGroup,
  RankMismatch,
  MembershipViolation,
  IncompatibleContexts,
  NotInKernel,
  WrongKind,
  UnsupportedOperands,
  NoWitness,
  UnknownEmbedding,
  SearchSpaceTooLarge,
  BudgetExceeded,
  NotSemisimple,
  UnsupportedFlavor,
  NonInvertibleSlot,
  CharTwo,
  ParseError,
  SchemaError,
  NotAHomomorphism,
  ClosureCapExceeded,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace pckit
