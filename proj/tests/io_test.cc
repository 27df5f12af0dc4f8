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

#include "icc/io.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "icc/agreement.h"
#include "icc/clustering.h"
#include "icc/generators.h"
#include "icc/nao_index.h"
#include "test_graphs.h"

namespace icc {
namespace {

using ::icc::testing::K4;
using ::icc::testing::MakeGraph;
using ::icc::testing::Triangle;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

absl::StatusOr<EdgeListReport> Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseEdgeList(in, "mem");
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / name).string();
}

TEST(FormatRealTest, RoundTripsAndIsCompact) {
  EXPECT_EQ(FormatReal(1.0), "1");
  EXPECT_EQ(FormatReal(0.5), "0.5");
  EXPECT_EQ(FormatReal(1.99), "1.99");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> any(0.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = any(rng);
    EXPECT_EQ(std::stod(FormatReal(x)), x);
  }
}

TEST(ParseEpsilonTest, DecimalsOnly) {
  EXPECT_EQ(ParseEpsilon("0.5").value(), 0.5);
  EXPECT_EQ(ParseEpsilon("2").value(), 2.0);
  EXPECT_EQ(ParseEpsilon(".25").value(), 0.25);
  EXPECT_EQ(ParseEpsilon("0").value(), 0.0);
  for (const char* bad : {"", ".", "1e-1", "-0.5", "+1", "inf", "nan", "2.0001", "0x1", "1..2",
                          "1.5 "}) {
    EXPECT_FALSE(ParseEpsilon(bad).ok()) << bad;
  }
}

TEST(EdgeListTest, PathFile) {
  EdgeListReport r = Parse("0 1\n1 2").value();
  EXPECT_EQ(r.graph.num_vertices(), 3u);
  EXPECT_EQ(r.graph.num_edges(), 2u);
  EXPECT_EQ(r.edge_lines, 2u);
}

TEST(EdgeListTest, DedupsUndirectedAndCountsSelfLoops) {
  EdgeListReport r = Parse("# comment\n1 0\n0 1\n\n3 3\n1\t2\n").value();
  EXPECT_EQ(r.graph.num_edges(), 2u);
  EXPECT_EQ(r.duplicates, 1u);
  EXPECT_EQ(r.self_loops, 1u);
  // The self-loop's vertex is kept, without the loop.
  EXPECT_TRUE(r.graph.HasVertex(3));
  EXPECT_EQ(r.graph.Degree(3).value(), 0u);
}

TEST(EdgeListTest, CsvWithHeader) {
  EdgeListReport r = Parse("id_1,id_2\n0,1\n2,1\n").value();
  EXPECT_EQ(r.graph.num_edges(), 2u);
  EXPECT_TRUE(r.graph.HasEdge(1, 2));
}

TEST(EdgeListTest, ErrorsNameTheLine) {
  auto r = Parse("0 1\n1 2 3\n");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(r.status().message(), HasSubstr("mem:2"));
  EXPECT_THAT(Parse("0 1\nx y\n").status().message(), HasSubstr("mem:2"));
  EXPECT_FALSE(Parse("0 -1\n").ok());
  EXPECT_FALSE(Parse("0 99999999999\n").ok());
}

TEST(EdgeListTest, MissingFileNamesPath) {
  auto r = ReadEdgeList("/nonexistent/graph.txt");
  EXPECT_EQ(r.status().code(), absl::StatusCode::kNotFound);
  EXPECT_THAT(r.status().message(), HasSubstr("/nonexistent/graph.txt"));
}

TEST(EdgeListTest, LineOrderDoesNotMatter) {
  Rng rng(8);
  SignedGraph g = RandomGraph(30, 0.2, rng);
  std::vector<std::string> lines;
  for (const auto& [u, v] : g.Edges()) {
    lines.push_back(rng() % 2 ? std::to_string(u) + " " + std::to_string(v)
                              : std::to_string(v) + " " + std::to_string(u));
  }
  std::string forward;
  for (const auto& l : lines) forward += l + "\n";
  std::shuffle(lines.begin(), lines.end(), rng);
  std::string shuffled;
  for (const auto& l : lines) shuffled += l + "\n";
  EXPECT_EQ(Parse(forward).value().graph, Parse(shuffled).value().graph);
}

TEST(UpdateStreamTest, ParsesAllOperations) {
  std::istringstream in("# header\nflip 0 1\naddv 4 0 1 2 3\naddv 5\ndelv 2\nquery 0.7\n");
  auto events = ParseUpdateStream(in, "s").value();
  ASSERT_EQ(events.size(), 5u);
  EXPECT_EQ(events[0].line, 2u);
  const auto& flip = std::get<FlipEdge>(events[0].event);
  EXPECT_EQ(flip.u, 0u);
  EXPECT_EQ(flip.v, 1u);
  EXPECT_THAT(std::get<AddVertex>(events[1].event).neighbors, ElementsAre(0, 1, 2, 3));
  EXPECT_TRUE(std::get<AddVertex>(events[2].event).neighbors.empty());
  EXPECT_EQ(std::get<RemoveVertex>(events[3].event).v, 2u);
  EXPECT_EQ(std::get<Query>(events[4].event).epsilon, 0.7);
}

TEST(UpdateStreamTest, ErrorsCarryLineNumbers) {
  for (const char* bad : {"flip 0\n", "flip 1 1\n", "addv\n", "addv 3 3\n", "delv 1 2\n",
                          "query\n", "query 3\n", "query 1e-3\n", "jump 1\n", "flip a b\n"}) {
    std::istringstream in(std::string("flip 0 1\n") + bad);
    auto events = ParseUpdateStream(in, "s");
    ASSERT_FALSE(events.ok()) << bad;
    EXPECT_THAT(events.status().message(), HasSubstr("s:2")) << bad;
  }
}

TEST(WriteClusteringTest, Format) {
  SignedGraph g = MakeGraph({}, {0, 1});
  std::ostringstream singletons;
  WriteClustering(Clustering::Singletons(g), singletons);
  EXPECT_EQ(singletons.str(), "0\t0\n1\t1\n");

  std::ostringstream one;
  WriteClustering(Clustering::FromLabels({{1, 5}, {0, 5}}).value(), one);
  EXPECT_EQ(one.str(), "0\t0\n1\t0\n");

  std::ostringstream k4;
  WriteClustering(CcBaseline(K4(), 0.7), k4);
  EXPECT_EQ(k4.str(), "0\t0\n1\t0\n2\t0\n3\t0\n");
}

TEST(WriteClusteringTest, UnwritablePath) {
  EXPECT_EQ(WriteClustering(Clustering(), "/nonexistent/dir/out.tsv").code(),
            absl::StatusCode::kUnavailable);
}

TEST(StatsCsvTest, HeaderOnlyForEmptySchedule) {
  std::ostringstream out;
  WriteStatsCsv({}, out);
  EXPECT_EQ(out.str(), "eps,agree_edges,light_vertices,heavy_vertices,clusters,cost,cc_ms,icc_ms\n");
}

TEST(StatsCsvTest, TriangleSchedule) {
  SignedGraph g = Triangle();
  std::vector<StatsRow> rows;
  const EpsilonSchedule schedule = MakeSchedule(g, 21).value();
  for (double eps : schedule) {
    ClusteringStats stats;
    const Clustering c = CcBaseline(g, eps, &stats);
    StatsRow row;
    row.eps = eps;
    row.agree_edges = stats.agree_edges;
    row.light_vertices = stats.light_vertices;
    row.heavy_vertices = stats.heavy_vertices;
    row.clusters = c.num_clusters();
    row.cost = ClusteringCost(g, c).value();
    row.icc_ms = 0.25;
    rows.push_back(row);
  }
  std::ostringstream out;
  WriteStatsCsv(rows, out);
  EXPECT_EQ(out.str(),
            "eps,agree_edges,light_vertices,heavy_vertices,clusters,cost,cc_ms,icc_ms\n"
            "0,0,0,3,3,3,,0.250\n"
            "1,0,3,0,3,3,,0.250\n"
            "1.99,3,3,0,3,3,,0.250\n");
}

TEST(HistogramCsvTest, HandGraphs) {
  std::ostringstream t;
  WriteHistogramCsv(DistanceMultiset(Triangle()), t);
  EXPECT_EQ(t.str(),
            "value,frequency\n1,3\n# edges,3\n# distinct,1\n# min,1\n# max,1\n# mode1,1,3\n");

  std::ostringstream k4;
  WriteHistogramCsv(DistanceMultiset(K4()), k4);
  EXPECT_THAT(k4.str(), HasSubstr("value,frequency\n0.66666666666666663,6\n"));

  std::ostringstream empty;
  WriteHistogramCsv(DistanceMultiset(SignedGraph()), empty);
  EXPECT_EQ(empty.str(), "value,frequency\n# edges,0\n# distinct,0\n");
}

TEST(SnapshotTest, RoundTripK4) {
  SignedGraph g = K4();
  NaoIndex index = NaoIndex::Build(g);
  std::stringstream buffer;
  SnapshotIndex(index, buffer);
  NaoIndex loaded = LoadIndex(buffer, g).value();
  EXPECT_EQ(NaoIndex::FirstDifference(index, loaded), std::nullopt);
  EXPECT_TRUE(loaded.CheckFresh(g).ok());
}

TEST(SnapshotTest, RoundTripRandomIsBitExact) {
  Rng rng(9);
  SignedGraph g = RandomGraph(60, 0.2, rng);
  NaoIndex index = NaoIndex::Build(g);
  const std::string path = TempPath("snapshot.txt");
  ASSERT_TRUE(SnapshotIndex(index, path).ok());
  NaoIndex loaded = LoadIndex(path, g).value();
  EXPECT_TRUE(loaded == index);
  std::remove(path.c_str());
}

TEST(SnapshotTest, EmptyGraphHasNoDataLines) {
  SignedGraph g;
  std::stringstream buffer;
  SnapshotIndex(NaoIndex::Build(g), buffer);
  EXPECT_EQ(buffer.str(), "# nao-index vertices=0 entries=0\n");
  EXPECT_EQ(LoadIndex(buffer, g).value().num_vertices(), 0u);
}

TEST(SnapshotTest, MutatedGraphIsRejected) {
  SignedGraph g = K4();
  std::stringstream buffer;
  SnapshotIndex(NaoIndex::Build(g), buffer);
  ASSERT_TRUE(g.Apply(FlipEdge{0, 1}).ok());
  EXPECT_EQ(LoadIndex(buffer, g).status().code(), absl::StatusCode::kFailedPrecondition);
}

TEST(SnapshotTest, CorruptTextIsDataLoss) {
  SignedGraph g = K4();
  for (const char* bad : {"0 1,0.5\n", "x: 1,0.5\n", "0: 1-0.5\n", "0: 1,abc\n"}) {
    std::istringstream in(bad);
    EXPECT_EQ(LoadIndex(in, g).status().code(), absl::StatusCode::kDataLoss) << bad;
  }
}

}  // namespace
}  // namespace icc
