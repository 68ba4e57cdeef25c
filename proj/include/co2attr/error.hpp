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

#ifndef CO2ATTR_ERROR_HPP
#define CO2ATTR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace co2attr {

enum class ErrorCode {
  // data_ingest
  DuplicateRecord,
  ParseError,
  SchemaError,
  DomainError,
  UnknownFactor,
  EmptyJoin,
  DegenerateTotal,
  // transform
  DegenerateSample,
  SampleTooSmall,
  // design
  EmptyFactorSet,
  UnknownTerm,
  // regress
  RankDeficient,
  Underdetermined,
  DegenerateResponse,
  LeverageOne,
  NotNested,
  // stepwise
  NoUsableCandidates,
  EmptySelection,
  // validate
  FoldRankDeficient,
  TooManyFolds,
  // quadform
  BackTransformDomain,
  // cli
  FileNotFound,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type.
/// `module()` names the component that raised it, so the CLI can emit a
/// machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace co2attr

#endif  // CO2ATTR_ERROR_HPP
