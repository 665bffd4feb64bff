/*
 * Copyright 2026 The tibias-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tibias/rtt_estimator.hpp"

using tibias::RttEstimator;

TEST_CASE("first sample initializes srtt and variance") {
  RttEstimator est;
  CHECK_FALSE(est.has_sample());
  est.add_sample(0.2);
  CHECK(est.has_sample());
  CHECK(est.srtt() == doctest::Approx(0.2));
  CHECK(est.rtt_min() == doctest::Approx(0.2));
  // rto = srtt + 4*rttvar = 0.2 + 4*0.1 = 0.6
  CHECK(est.rto() == doctest::Approx(0.6));
}

TEST_CASE("subsequent samples smooth with 1/8 and 1/4 gains") {
  RttEstimator est;
  est.add_sample(0.2);
  est.add_sample(0.3);
  // rttvar = 0.75*0.1 + 0.25*|0.2-0.3| = 0.1
  // srtt = 0.875*0.2 + 0.125*0.3 = 0.2125
  CHECK(est.srtt() == doctest::Approx(0.2125));
  CHECK(est.rto() == doctest::Approx(0.2125 + 0.4));
  CHECK(est.rtt_min() == doctest::Approx(0.2));
}

TEST_CASE("rto clamps to the scenario bounds") {
  RttEstimator fast;
  for (int i = 0; i < 50; ++i) fast.add_sample(0.001);
  CHECK(fast.rto() == tibias::kMinRto);

  RttEstimator slow;
  for (int i = 0; i < 5; ++i) slow.add_sample(100.0);
  CHECK(slow.rto() == tibias::kMaxRto);
}

TEST_CASE("minimum tracks the smallest sample") {
  RttEstimator est;
  est.add_sample(0.3);
  est.add_sample(0.25);
  est.add_sample(0.5);
  est.add_sample(0.21);
  CHECK(est.rtt_min() == doctest::Approx(0.21));
  CHECK(est.srtt() >= est.rtt_min());
}
