// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_ERROR_HPP
#define ERGCERT_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ergc {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  ExponentZero,
  NotPrimePower,
  FieldTooLarge,
  ZeroHasNoLog,
  IndexOutOfRange,
  BadCongruence,
  WrongN,
  NotCoprime,
  ZeroVector,
  NotABijection,
  AsymmetricGeneratingSet,
  SameVertex,
  EmptyGraph,
  NotEdgeRegular,
  NotAClique,
  NoOutsideVertices,
  HypothesisViolated,
  NotAPartition,
  Io,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace ergc

#endif
