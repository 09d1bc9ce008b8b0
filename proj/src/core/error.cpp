// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/error.hpp"

namespace ergc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::NotPrime: return "NotPrime";
  case ErrorCode::ExponentZero: return "ExponentZero";
  case ErrorCode::NotPrimePower: return "NotPrimePower";
  case ErrorCode::FieldTooLarge: return "FieldTooLarge";
  case ErrorCode::ZeroHasNoLog: return "ZeroHasNoLog";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::BadCongruence: return "BadCongruence";
  case ErrorCode::WrongN: return "WrongN";
  case ErrorCode::NotCoprime: return "NotCoprime";
  case ErrorCode::ZeroVector: return "ZeroVector";
  case ErrorCode::NotABijection: return "NotABijection";
  case ErrorCode::AsymmetricGeneratingSet: return "AsymmetricGeneratingSet";
  case ErrorCode::SameVertex: return "SameVertex";
  case ErrorCode::EmptyGraph: return "EmptyGraph";
  case ErrorCode::NotEdgeRegular: return "NotEdgeRegular";
  case ErrorCode::NotAClique: return "NotAClique";
  case ErrorCode::NoOutsideVertices: return "NoOutsideVertices";
  case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  case ErrorCode::NotAPartition: return "NotAPartition";
  case ErrorCode::Io: return "Io";
  case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

} // namespace ergc
