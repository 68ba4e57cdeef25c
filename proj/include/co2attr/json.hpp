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

#ifndef CO2ATTR_JSON_HPP
#define CO2ATTR_JSON_HPP

#include <json.hpp>

namespace co2attr {

// Insertion-ordered so serialized reports are stable across runs.
using Json = nlohmann::ordered_json;

}  // namespace co2attr

#endif  // CO2ATTR_JSON_HPP
