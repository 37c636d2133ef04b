/* Copyright 2026 The pinch Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "pinch/error.hpp"

namespace pinch {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::InvalidConstants: return "InvalidConstants";
    case ErrorCode::NotFiltrationAdapted: return "NotFiltrationAdapted";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NotWellFounded: return "NotWellFounded";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::Unsolvable: return "Unsolvable";
    case ErrorCode::ExpressionFailure: return "ExpressionFailure";
    case ErrorCode::IntegralityFailure: return "IntegralityFailure";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace pinch
