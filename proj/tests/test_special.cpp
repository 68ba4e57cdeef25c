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

#include <doctest.h>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>

#include "co2attr/special.hpp"
#include "test_support.hpp"

using co2attr::testing::rel_err;
using co2attr::testing::Rng;
namespace special = co2attr::special;

TEST_SUITE("special") {

TEST_CASE("incomplete beta matches boost") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const double a = rng.uniform(0.5, 60.0);
    const double b = rng.uniform(0.5, 60.0);
    const double x = rng.uniform();
    const double expected = boost::math::ibeta(a, b, x);
    const double got = special::incomplete_beta(a, b, x);
    CHECK(std::abs(got - expected) <= 1e-12 + 1e-10 * expected);
  }
  CHECK(special::incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(special::incomplete_beta(2.0, 3.0, 1.0) == 1.0);
}

TEST_CASE("F upper tail matches boost, including deep tails") {
  Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const double d1 = rng.integer(1, 10);
    const double d2 = rng.integer(1, 60);
    const double f = std::exp(rng.uniform(-6.0, 7.0));
    const boost::math::fisher_f_distribution<double> dist(d1, d2);
    const double expected = boost::math::cdf(boost::math::complement(dist, f));
    const double got = special::f_upper_tail(f, d1, d2);
    if (expected > 1e-300) {
      CHECK(rel_err(got, expected) <= 1e-9);
    } else {
      CHECK(got <= 1e-290);
    }
  }
  CHECK(special::f_upper_tail(0.0, 3.0, 10.0) == 1.0);
}

TEST_CASE("normal quantile matches boost") {
  const boost::math::normal_distribution<double> n01;
  for (double p : {1e-300, 1e-20, 1e-8, 0.001, 0.025, 0.1, 0.3, 0.5, 0.7, 0.9, 0.975, 0.999,
                   1.0 - 1e-12}) {
    const double expected = boost::math::quantile(n01, p);
    const double got = special::normal_quantile(p);
    CHECK(std::abs(got - expected) <= 1e-13 * (1.0 + std::abs(expected)));
  }
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const double p = rng.uniform();
    CHECK(std::abs(special::normal_quantile(p) - boost::math::quantile(n01, p)) <= 1e-12);
  }
}

}  // TEST_SUITE
