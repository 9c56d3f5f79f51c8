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
using ra::Graph;
using ra::GameSpec;
using ra::PlayerSet;

TEST(PlayerSet, BasicOperations) {
  PlayerSet s{3, 1, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.to_string(), "{1,3,5}");
  EXPECT_EQ((s - PlayerSet{1}).to_vector(), (std::vector<ra::Player>{3, 5}));
  EXPECT_TRUE(PlayerSet{1}.is_subset_of(s));
  EXPECT_EQ(s.max_player(), 5);
  EXPECT_EQ(PlayerSet::range(4).size(), 4);
  int visited = 0;
  ra::for_each_subset(s, [&](PlayerSet) { ++visited; });
  EXPECT_EQ(visited, 8);
}

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), ra::DomainError);
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), ra::DomainError);
  EXPECT_THROW(Graph(3, {{1, 4}}), ra::DomainError);
  EXPECT_THROW(Graph(3, {{1, 2, 0.0}}, true), ra::DomainError);
  EXPECT_THROW(Graph(65, {}), ra::DomainError);
}

TEST(Boundary, Examples) {
  EXPECT_EQ(ra::boundary(Graph::complete(3), PlayerSet{1}), (PlayerSet{2, 3}));
  EXPECT_TRUE(ra::boundary(Graph::complete(3), PlayerSet{}).empty());
  EXPECT_EQ(ra::boundary(Graph::path(3), PlayerSet{2}), (PlayerSet{1, 3}));
}

TEST(Ball, HopAndWeighted) {
  EXPECT_EQ(ra::ball(Graph::path(3), PlayerSet{1}, 1.0), (PlayerSet{1, 2}));
  EXPECT_TRUE(ra::ball(Graph::path(3), PlayerSet{}, 5.0).empty());
  Graph w(3, {{1, 2, 0.4}, {2, 3, 0.7}}, true);
  EXPECT_EQ(ra::ball(w, PlayerSet{1}, 1.0), (PlayerSet{1, 2}));
  EXPECT_EQ(ra::ball(w, PlayerSet{1}, 1.1), (PlayerSet{1, 2, 3}));
}

TEST(CharValue, Examples) {
  EXPECT_EQ(ra::char_value(GameSpec::nc1(Graph::star(3, 3)), PlayerSet{1}), 2.0);
  const auto fo = GameSpec::fo(ra::CreditInstance(2, {{PlayerSet{1, 2}, 2.0}}));
  EXPECT_EQ(ra::char_value(fo, PlayerSet{1}), 0.0);
  EXPECT_EQ(ra::char_value(fo, PlayerSet{1, 2}), 2.0);
  const auto fc = GameSpec::fc(ra::CreditInstance(3, {{PlayerSet{1, 2}, 2.0}, {PlayerSet{2, 3}, 1.0}}));
  EXPECT_EQ(ra::char_value(fc, PlayerSet{2}), 3.0);
}

TEST(CoauthorContributions, SumsJointPapers) {
  ra::CreditInstance ci(3, {{PlayerSet{1, 2}, 2}, {PlayerSet{1, 2}, 3}, {PlayerSet{1, 3}, 1}});
  const auto c = ra::coauthor_contributions(ci, 1);
  EXPECT_EQ(c.at(2), 5.0);
  EXPECT_EQ(c.at(3), 1.0);
  ra::CreditInstance solo(2, {{PlayerSet{1}, 4}});
  EXPECT_TRUE(ra::coauthor_contributions(solo, 1).empty());
}

TEST(InducedSubgraph, OnePaperPerEdge) {
  Graph tri(3, {{1, 2, 1}, {2, 3, 2}, {1, 3, 3}}, true);
  const auto ci = ra::induced_subgraph_to_credit(tri);
  ASSERT_EQ(ci.papers().size(), 3u);
  const auto fo = GameSpec::fo(ci);
  EXPECT_EQ(ra::char_value(fo, PlayerSet{2, 3}), 2.0);
  EXPECT_EQ(ra::char_value(fo, PlayerSet{1, 2, 3}), 6.0);
  EXPECT_TRUE(ra::induced_subgraph_to_credit(Graph(4, {})).papers().empty());
}

TEST(Games, EmptyCoalitionAndMonotonicity) {
  ra::testing::Rng rng(11);
  for (const char* variant : {"nc1", "nc2", "nc3", "fc", "fo"}) {
    for (int rep = 0; rep < 10; ++rep) {
      const int n = ra::testing::uniform_int(rng, 2, 7);
      const GameSpec spec = ra::testing::random_game(rng, variant, n, ra::testing::uniform_int(rng, 1, 3));
      EXPECT_EQ(ra::char_value(spec, {}), 0.0) << variant;
      const PlayerSet all = PlayerSet::range(n);
      ra::for_each_subset(all, [&](PlayerSet s) {
        for (ra::Player j : all - s)
          EXPECT_LE(ra::char_value(spec, s), ra::char_value(spec, s.with(j)) + 1e-12) << variant;
      });
    }
  }
}

TEST(Games, Nc2WithThresholdOneIsNc1) {
  ra::testing::Rng rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = ra::testing::random_graph(rng, 6, 0.4);
    ra::for_each_subset(g.players(), [&](PlayerSet s) {
      EXPECT_EQ(ra::char_value(GameSpec::nc2(g, 1), s), ra::char_value(GameSpec::nc1(g), s));
    });
  }
}

TEST(Games, Nc3WithUnitCutIsNc1) {
  ra::testing::Rng rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = ra::testing::random_graph(rng, 6, 0.4);
    ra::for_each_subset(g.players(), [&](PlayerSet s) {
      EXPECT_EQ(ra::char_value(GameSpec::nc3(g, 1.0), s), ra::char_value(GameSpec::nc1(g), s));
    });
  }
}

TEST(Games, ExplicitTableNeedsEmptyCoalition) {
  EXPECT_THROW(ra::ExplicitGame(2, {{1, 1.0}}), ra::DomainError);
  EXPECT_THROW(GameSpec::nc2(Graph::path(3), 0), ra::DomainError);
  EXPECT_THROW(GameSpec::nc3(Graph::path(3), 0.0), ra::DomainError);
}
