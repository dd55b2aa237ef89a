// Copyright 2026 The ctk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctk/errors.hpp"

namespace ctk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NormViolation: return "NormViolation";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::OverlappingOutputs: return "OverlappingOutputs";
    case ErrorCode::SharedSubstrate: return "SharedSubstrate";
    case ErrorCode::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::TooFewAttributes: return "TooFewAttributes";
    case ErrorCode::NotPreparable: return "NotPreparable";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoFixedPointFreePermutation: return "NoFixedPointFreePermutation";
    case ErrorCode::UnresolvedName: return "UnresolvedName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace ctk
