// Copyright (c) 2026 the ecseq authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ecseq {

enum class Err {
  InvalidArgument,
  NotPrime,
  ModulusMismatch,
  DivisionByZero,
  NonResidue,
  PointNotOnCurve,
  CurveShapeMismatch,
  ExceptionalPoint,
  ScaleExceeded,
  NoSuchPoint,
  PoleAtPoint,
  ModelMismatch,
  ZeroDenominator,
  NotCoprime,
  InvalidExponent,
  RangeError,
  InconsistentDelta,
  ParseError,
  Internal,
};

const char* err_name(Err e);

/// Library error: a code from the fixed taxonomy plus a human-readable
/// message. `index` is the 1-based sequence index for pole hits, -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg, std::int64_t index = -1)
      : std::runtime_error(msg), code_(code), index_(index) {}

  Err code() const { return code_; }
  std::int64_t index() const { return index_; }

 private:
  Err code_;
  std::int64_t index_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg,
                              std::int64_t index = -1) {
  throw Error(code, msg, index);
}

}  // namespace ecseq
