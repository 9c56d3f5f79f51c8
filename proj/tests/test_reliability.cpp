// Copyright 2026 The reliattack Authors.
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

#include <gtest/gtest.h>

#include "support/instances.hpp"

namespace ra = reliattack;
using ra::PlayerSet;
using ra::ReliabilityProfile;

TEST(PiProb, Examples) {
  const ReliabilityProfile p({0.5, 0.25});
  EXPECT_DOUBLE_EQ(ra::pi_prob({}, {}, p), 1.0);
  EXPECT_DOUBLE_EQ(ra::pi_prob(PlayerSet{1}, PlayerSet{1, 2}, p), 0.375);
  EXPECT_DOUBLE_EQ(ra::pi_prob(PlayerSet{1, 2}, PlayerSet{1, 2}, ReliabilityProfile::uniform(2, 1)), 1.0);
  EXPECT_THROW(ra::pi_prob(PlayerSet{1}, PlayerSet{2}, p), ra::DomainError);
}

TEST(PiProb, SumsToOneOverSubsets) {
  ra::testing::Rng rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const auto p = ra::testing::random_profile(rng, 7);
    const PlayerSet s = PlayerSet::from_mask(rng() & 0x7f);
    double total = 0.0;
    ra::for_each_subset(s, [&](PlayerSet t) { total += ra::pi_prob(t, s, p); });
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Profile, RejectsOutOfRange) {
  EXPECT_THROW(ReliabilityProfile({0.5, 1.2}), ra::DomainError);
  EXPECT_THROW(ReliabilityProfile({-0.1}), ra::DomainError);
}

TEST(PiPartial, Examples) {
  const ReliabilityProfile p({0.3, 0.6, 0.9});
  EXPECT_EQ(ra::pi_partial(PlayerSet{1}, PlayerSet{1, 2}, p, 3), 0.0);
  EXPECT_DOUBLE_EQ(ra::pi_partial(PlayerSet{1}, PlayerSet{1, 2}, p, 1), 1.0 - 0.6);
}

TEST(PiPartial, MatchesFiniteDifference) {
  ra::testing::Rng rng(22);
  for (int rep = 0; rep < 50; ++rep) {
    const auto p = ra::testing::random_profile(rng, 6, 0.01, 0.99);
    const PlayerSet s = PlayerSet::from_mask(rng() & 0x3f);
    const PlayerSet t = PlayerSet::from_mask(rng() & s.mask());
    for (ra::Player j = 1; j <= 6; ++j) {
      const double fd = ra::finite_difference(
          [&](const ReliabilityProfile& q) { return ra::pi_prob(t, s, q); }, p, j, 1e-6);
      EXPECT_NEAR(ra::pi_partial(t, s, p, j), fd, 1e-6);
    }
  }
}

TEST(ReliabilityValue, Examples) {
  ra::testing::Rng rng(23);
  const auto k2 = ra::GameSpec::nc1(ra::Graph::complete(2));
  EXPECT_DOUBLE_EQ(ra::reliability_value(k2, ReliabilityProfile({0.5, 0.5}), PlayerSet{1, 2}), 1.5);
  const ra::GameSpec single = ra::ExplicitGame(1, {{0, 0.0}, {1, 1.0}});
  EXPECT_DOUBLE_EQ(ra::reliability_value(single, ReliabilityProfile({0.6}), PlayerSet{1}), 0.6);
  for (const char* variant : {"nc1", "nc2", "nc3", "fc", "fo"}) {
    const auto spec = ra::testing::random_game(rng, variant, 5, 2);
    ra::for_each_subset(PlayerSet::range(5), [&](PlayerSet s) {
      EXPECT_NEAR(ra::reliability_value(spec, ReliabilityProfile::uniform(5, 1.0), s),
                  ra::char_value(spec, s), 1e-12);
    });
  }
}

TEST(ReliabilityValue, MultilinearInEachCoordinate) {
  ra::testing::Rng rng(24);
  for (int rep = 0; rep < 20; ++rep) {
    const auto spec = ra::testing::random_game(rng, "nc1", 6);
    const auto p = ra::testing::random_profile(rng, 6);
    const PlayerSet s = PlayerSet::range(6);
    const ra::Player j = ra::testing::uniform_int(rng, 1, 6);
    const double a = ra::reliability_value(spec, p.with(j, 0.0), s);
    const double b = ra::reliability_value(spec, p.with(j, 1.0), s);
    const double t = ra::testing::uniform(rng, 0, 1);
    EXPECT_NEAR(ra::reliability_value(spec, p.with(j, t), s), (1 - t) * a + t * b, 1e-12);
  }
}

TEST(ReliabilityValue, EnforcesSubsetCap) {
  ra::Limits limits;
  limits.reliability_subset_cap = 3;
  const auto spec = ra::GameSpec::nc1(ra::Graph::complete(4));
  EXPECT_THROW(ra::reliability_value(spec, ReliabilityProfile::uniform(4, 1), PlayerSet::range(4), limits),
               ra::ResourceError);
}
