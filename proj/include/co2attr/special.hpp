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

#ifndef CO2ATTR_SPECIAL_HPP
#define CO2ATTR_SPECIAL_HPP

namespace co2attr::special {

/// Regularized incomplete beta I_x(a, b), continued fraction (modified
/// Lentz) with relative tolerance 1e-12 or better.
double incomplete_beta(double a, double b, double x);

/// P(F > f) for F ~ F(d1, d2).
double f_upper_tail(double f, double d1, double d2);

/// Standard normal quantile (Wichura AS 241, ~1e-16 relative).
double normal_quantile(double p);

}  // namespace co2attr::special

#endif  // CO2ATTR_SPECIAL_HPP
