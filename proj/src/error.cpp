// Copyright 2026 The co2attr Authors
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

#include "co2attr/error.hpp"

namespace co2attr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateRecord: return "DuplicateRecord";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnknownFactor: return "UnknownFactor";
    case ErrorCode::EmptyJoin: return "EmptyJoin";
    case ErrorCode::DegenerateTotal: return "DegenerateTotal";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::SampleTooSmall: return "SampleTooSmall";
    case ErrorCode::EmptyFactorSet: return "EmptyFactorSet";
    case ErrorCode::UnknownTerm: return "UnknownTerm";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::DegenerateResponse: return "DegenerateResponse";
    case ErrorCode::LeverageOne: return "LeverageOne";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NoUsableCandidates: return "NoUsableCandidates";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::FoldRankDeficient: return "FoldRankDeficient";
    case ErrorCode::TooManyFolds: return "TooManyFolds";
    case ErrorCode::BackTransformDomain: return "BackTransformDomain";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace co2attr
