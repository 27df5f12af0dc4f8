// Copyright 2026 The icc Authors.
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

#include "icc/agreement.h"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "icc/generators.h"
#include "icc/io.h"
#include "icc/nao_index.h"
#include "icc/oracle.h"
#include "test_graphs.h"

namespace icc {
namespace {

using ::icc::testing::FixturePath;
using ::icc::testing::K4;
using ::icc::testing::MakeGraph;
using ::icc::testing::Path3;
using ::icc::testing::Star3;
using ::icc::testing::Triangle;
using ::testing::ElementsAre;
using ::testing::Pair;

TEST(NonAgreementTest, HandGraphs) {
  EXPECT_EQ(NonAgreement(Triangle(), 0, 1).value(), 1.0);
  EXPECT_EQ(NonAgreement(Path3(), 0, 1).value(), 1.5);
  EXPECT_EQ(NonAgreement(K4(), 2, 3).value(), 2.0 / 3.0);
  EXPECT_EQ(NonAgreement(Star3(), 0, 2).value(), 4.0 / 3.0);
}

TEST(NonAgreementTest, MatchesSymmetricDifferenceOnHandGraphs) {
  for (const SignedGraph& g : {Triangle(), Path3(), K4(), Star3()}) {
    for (const auto& [u, v] : g.Edges()) {
      EXPECT_EQ(NonAgreement(g, u, v).value(), oracle::NonAgreement(g, u, v).value());
    }
  }
}

TEST(NonAgreementTest, Errors) {
  EXPECT_EQ(NonAgreement(Path3(), 0, 2).status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(NonAgreement(Path3(), 0, 7).status().code(), absl::StatusCode::kNotFound);
  EXPECT_EQ(InAgreement(Path3(), 0, 2, 1.0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(AgreeCount(Path3(), 7, 1.0).status().code(), absl::StatusCode::kNotFound);
  EXPECT_EQ(IsLight(Path3(), 7, 1.0).status().code(), absl::StatusCode::kNotFound);
}

TEST(InAgreementTest, StrictBoundary) {
  EXPECT_FALSE(InAgreement(Triangle(), 0, 1, 1.0).value());
  EXPECT_TRUE(InAgreement(Triangle(), 0, 1, 1.01).value());
  EXPECT_FALSE(InAgreement(K4(), 0, 1, 0.5).value());
}

TEST(AgreeCountTest, Examples) {
  EXPECT_EQ(AgreeCount(K4(), 0, 0.7).value(), 3u);
  EXPECT_EQ(AgreeCount(K4(), 0, 0.0).value(), 0u);
  EXPECT_EQ(AgreeCount(MakeGraph({}, {4}), 4, 1.5).value(), 0u);
}

TEST(IsLightTest, Examples) {
  EXPECT_TRUE(IsLight(Triangle(), 0, 1.01).value());
  EXPECT_FALSE(IsLight(K4(), 0, 0.7).value());
  EXPECT_FALSE(IsLight(MakeGraph({}, {4}), 4, 1.0).value());
  EXPECT_FALSE(IsLight(K4(), 0, 0.0).value());
}

TEST(DistanceMultisetTest, HandGraphs) {
  DistanceStats t = DistanceMultiset(Triangle());
  EXPECT_THAT(t.sorted, ElementsAre(1.0, 1.0, 1.0));
  EXPECT_EQ(t.distinct(), 1u);
  EXPECT_THAT(t.TopModes(), ElementsAre(Pair(1.0, 3u)));

  DistanceStats k4 = DistanceMultiset(K4());
  EXPECT_EQ(k4.sorted, std::vector<double>(6, 2.0 / 3.0));

  DistanceStats star = DistanceMultiset(Star3());
  EXPECT_EQ(star.min(), 4.0 / 3.0);
  EXPECT_EQ(star.max(), 4.0 / 3.0);
}

TEST(DistanceMultisetTest, ModesOrderedByFrequencyThenValue) {
  // Path a-b-c-d gives 1.5, 2, 1.5; a lone edge gives 2; a triangle three 1s.
  DistanceStats s = DistanceMultiset(
      MakeGraph({{0, 1}, {1, 2}, {2, 3}, {8, 9}, {20, 21}, {21, 22}, {20, 22}}));
  EXPECT_THAT(s.histogram, ElementsAre(Pair(1.0, 3u), Pair(1.5, 2u), Pair(2.0, 2u)));
  EXPECT_THAT(s.TopModes(2), ElementsAre(Pair(1.0, 3u), Pair(1.5, 2u)));
  EXPECT_THAT(s.TopModes(5), ElementsAre(Pair(1.0, 3u), Pair(1.5, 2u), Pair(2.0, 2u)));
}

TEST(ScheduleTest, CollapsesOnUniformGraphs) {
  EXPECT_THAT(MakeSchedule(Triangle(), 21).value().values(), ElementsAre(0.0, 1.0, 1.99));
  EXPECT_THAT(MakeSchedule(K4(), 21).value().values(), ElementsAre(0.0, 2.0 / 3.0, 1.99));
}

TEST(ScheduleTest, PicksRoundedIndicesOverRepetitions) {
  const std::vector<double> sorted = {0.1, 0.2, 0.3, 0.4};
  // i * 3 / 2 for i = 0, 1, 2 gives 0, 1.5 -> 2, 3.
  EXPECT_THAT(MakeScheduleFromSorted(sorted, 3).value().values(),
              ElementsAre(0.0, 0.1, 0.3, 0.4, 1.99));
  const std::vector<double> repeated = {0.5, 0.5, 0.5, 0.5, 1.25};
  EXPECT_THAT(MakeScheduleFromSorted(repeated, 3).value().values(),
              ElementsAre(0.0, 0.5, 1.25, 1.99));
}

TEST(ScheduleTest, DistancesAboveSentinelStayOrdered) {
  const std::vector<double> sorted = {0.5, 1.995};
  EXPECT_THAT(MakeScheduleFromSorted(sorted, 2).value().values(),
              ElementsAre(0.0, 0.5, 1.99, 1.995));
}

TEST(ScheduleTest, Errors) {
  EXPECT_EQ(MakeSchedule(MakeGraph({}, {1, 2}), 21).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(MakeSchedule(Triangle(), 1).status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(EpsilonSchedule::Create({0.5, 0.5}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(EpsilonSchedule::Create({0.5, 2.5}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_TRUE(EpsilonSchedule::Create({}).ok());
}

TEST(ScheduleTest, SizeBoundsOnRandomGraphs) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    SignedGraph g = RandomGraph(50, 0.1 + 0.01 * trial, rng);
    if (g.num_edges() == 0) continue;
    EpsilonSchedule s = MakeSchedule(g, 21).value();
    EXPECT_GE(s.size(), 3u);
    EXPECT_LE(s.size(), 23u);
    EXPECT_EQ(s.values().front(), 0.0);
  }
}

TEST(AgreementPropertyTest, FormulaMatchesOracleSymmetricAndInRange) {
  Rng rng(3);
  std::size_t checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 63;
    SignedGraph g = RandomGraph(n, 0.05 + 0.9 * (trial % 10) / 10.0, rng);
    for (const auto& [u, v] : g.Edges()) {
      const double d = NonAgreement(g, u, v).value();
      ASSERT_EQ(d, oracle::NonAgreement(g, u, v).value()) << u << "-" << v;
      ASSERT_EQ(d, NonAgreement(g, v, u).value());
      ASSERT_GE(d, 0.0);
      ASSERT_LE(d, 2.0);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(AgreementPropertyTest, AgreementIsMonotoneOverSchedules) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    SignedGraph g = RandomGraph(40, 0.2, rng);
    if (g.num_edges() == 0) continue;
    const EpsilonSchedule schedule = MakeSchedule(g, 21).value();
    std::vector<std::size_t> previous(g.num_vertices(), 0);
    std::size_t previous_edges = 0;
    for (double eps : schedule) {
      std::size_t edges = 0;
      for (const auto& [u, v] : g.Edges()) edges += InAgreement(g, u, v, eps).value() ? 1 : 0;
      EXPECT_GE(edges, previous_edges) << eps;
      previous_edges = edges;
      const std::vector<VertexId> ids = g.SortedVertices();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::size_t count = AgreeCount(g, ids[i], eps).value();
        EXPECT_GE(count, previous[i]);
        previous[i] = count;
      }
    }
  }
}

// With the vertex itself at rank 1, a vertex is heavy iff its stored entry at
// rank ceil(eps * deg) agrees. For an integer count a and real x, a < x iff
// a < ceil(x), so this must coincide with agree_count < eps * deg.
TEST(LightnessThresholdTest, CeilingRuleMatchesDirectDefinitionExhaustively) {
  std::vector<double> grid;
  for (int k = 0; k <= 20000; ++k) grid.push_back(k / 10000.0);
  for (std::size_t d = 1; d <= 12; ++d) {
    for (std::size_t a = 0; a <= d; ++a) {
      const double x = static_cast<double>(a) / static_cast<double>(d);
      grid.push_back(x);
      grid.push_back(std::nextafter(x, 0.0));
      grid.push_back(std::nextafter(x, 3.0));
    }
  }
  for (std::size_t d = 0; d <= 12; ++d) {
    for (std::size_t a = 0; a <= d; ++a) {
      for (double eps : grid) {
        const std::size_t needed = NaoIndex::LightnessThreshold(d, eps) - 1;
        // Stored entries 1..a agree, the rest do not.
        const bool heavy = needed == 0 || (needed <= d && needed <= a);
        // Counting the vertex itself against the full threshold.
        const bool heavy_with_self = a + 1 >= NaoIndex::LightnessThreshold(d, eps);
        ASSERT_EQ(heavy, !IsLightCount(a, d, eps)) << "d=" << d << " a=" << a << " eps=" << eps;
        ASSERT_EQ(heavy_with_self, heavy);
      }
    }
  }
}

TEST(LightnessThresholdTest, Examples) {
  EXPECT_EQ(NaoIndex::LightnessThreshold(3, 0.7), 4u);
  EXPECT_EQ(NaoIndex::LightnessThreshold(2, 1.01), 4u);
  EXPECT_EQ(NaoIndex::LightnessThreshold(9, 0.0), 1u);
  EXPECT_EQ(NaoIndex::LightnessThreshold(0, 1.5), 1u);
}

struct Witness {
  VertexId vertex;
  double light_eps;
  double heavy_eps;
};

std::optional<Witness> ReadWitness(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    const std::string tag = "# witness:";
    if (line.rfind(tag, 0) != 0) continue;
    std::istringstream fields(line.substr(tag.size()));
    Witness w;
    if (fields >> w.vertex >> w.light_eps >> w.heavy_eps) return w;
  }
  return std::nullopt;
}

TEST(LightnessTest, ArchivedWitnessIsNotMonotone) {
  const std::string path = FixturePath("lightness_witness.txt");
  const SignedGraph g = ReadEdgeList(path).value().graph;
  const std::optional<Witness> w = ReadWitness(path);
  ASSERT_TRUE(w.has_value());
  ASSERT_LT(w->light_eps, w->heavy_eps);
  EXPECT_TRUE(IsLight(g, w->vertex, w->light_eps).value());
  EXPECT_FALSE(IsLight(g, w->vertex, w->heavy_eps).value());
}

TEST(LightnessTest, SearchFindsNonMonotoneVertex) {
  bool found = false;
  for (int seed = 0; seed < 200 && !found; ++seed) {
    Rng rng(seed);
    SignedGraph g = RandomGraph(4 + seed % 5, 0.5, rng);
    for (VertexId v : g.SortedVertices()) {
      for (int a = 1; a <= 40 && !found; ++a) {
        for (int b = a + 1; b <= 40 && !found; ++b) {
          found = IsLight(g, v, a / 20.0).value() && !IsLight(g, v, b / 20.0).value();
        }
      }
    }
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace icc
