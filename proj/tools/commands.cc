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

#include "commands.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <system_error>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "icc/agreement.h"
#include "icc/clustering.h"
#include "icc/generators.h"
#include "icc/io.h"
#include "icc/nao_index.h"
#include "icc/oracle.h"
#include "icc/signed_graph.h"

namespace icc::cli {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string Ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

int Fail(std::ostream& err, const absl::Status& status, int code = kUsageError) {
  err << "error: " << status.message() << "\n";
  return code;
}

// Writing over an input would destroy it before (or while) it is read.
bool SamePath(const std::string& a, const std::string& b) {
  std::error_code ec;
  if (std::filesystem::equivalent(a, b, ec)) return true;
  const auto na = std::filesystem::weakly_canonical(a, ec);
  if (ec) return a == b;
  const auto nb = std::filesystem::weakly_canonical(b, ec);
  if (ec) return a == b;
  return na == nb;
}

absl::Status CheckOutput(const std::string& out, const std::vector<std::string>& inputs) {
  if (out.empty()) return absl::InvalidArgumentError("missing output path");
  for (const std::string& in : inputs) {
    if (SamePath(out, in)) {
      return absl::InvalidArgumentError("output path " + out + " is also an input");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<SignedGraph> LoadGraph(const std::string& path, std::ostream& out) {
  absl::StatusOr<EdgeListReport> report = ReadEdgeList(path);
  if (!report.ok()) return report.status();
  out << "graph: vertices=" << report->graph.num_vertices()
      << " edges=" << report->graph.num_edges() << " duplicates=" << report->duplicates
      << " self_loops=" << report->self_loops << "\n";
  return std::move(report->graph);
}

StatsRow RowFrom(double eps, const ClusteringStats& stats, const Clustering& c,
                 std::uint64_t cost) {
  StatsRow row;
  row.eps = eps;
  row.agree_edges = stats.agree_edges;
  row.light_vertices = stats.light_vertices;
  row.heavy_vertices = stats.heavy_vertices;
  row.clusters = c.num_clusters();
  row.cost = cost;
  return row;
}

std::string DescribeEvent(const UpdateEvent& event) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, FlipEdge>) {
          return "flip " + std::to_string(e.u) + " " + std::to_string(e.v);
        } else if constexpr (std::is_same_v<T, AddVertex>) {
          std::string s = "addv " + std::to_string(e.v);
          for (VertexId w : e.neighbors) s += " " + std::to_string(w);
          return s;
        } else if constexpr (std::is_same_v<T, RemoveVertex>) {
          return "delv " + std::to_string(e.v);
        } else {
          return "query " + FormatReal(e.epsilon);
        }
      },
      event);
}

std::string DescribePartition(const Clustering& c) {
  std::string s;
  for (const auto& members : c.Clusters()) {
    s += "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) s += " ";
      s += std::to_string(members[i]);
    }
    s += "}";
  }
  return s;
}

}  // namespace

int RunCluster(const ClusterOptions& options, std::ostream& out, std::ostream& err) {
  absl::StatusOr<double> eps = ParseEpsilon(options.eps_text);
  if (!eps.ok()) return Fail(err, eps.status());
  if (absl::Status s = CheckOutput(options.out_path, {options.graph_path}); !s.ok()) {
    return Fail(err, s);
  }
  absl::StatusOr<SignedGraph> g = LoadGraph(options.graph_path, out);
  if (!g.ok()) return Fail(err, g.status());

  ClusteringStats stats;
  Clustering result;
  if (options.baseline_only) {
    const auto start = Clock::now();
    result = CcBaseline(*g, *eps, &stats);
    out << "cc_ms=" << Ms(MillisSince(start)) << "\n";
  } else {
    auto start = Clock::now();
    NaoIndex index = NaoIndex::Build(*g, {options.build_threads});
    out << "build_ms=" << Ms(MillisSince(start)) << "\n";
    start = Clock::now();
    absl::StatusOr<Clustering> c = IccQuery(index, *g, *eps, &stats);
    if (!c.ok()) return Fail(err, c.status());
    out << "icc_ms=" << Ms(MillisSince(start)) << "\n";
    result = *std::move(c);
  }
  absl::StatusOr<std::uint64_t> cost = ClusteringCost(*g, result);
  if (!cost.ok()) return Fail(err, cost.status());
  out << "eps=" << FormatReal(*eps) << " clusters=" << result.num_clusters()
      << " cost=" << *cost << " agree_edges=" << stats.agree_edges
      << " light=" << stats.light_vertices << " heavy=" << stats.heavy_vertices << "\n";
  if (absl::Status s = WriteClustering(result, options.out_path); !s.ok()) return Fail(err, s);
  return kSuccess;
}

int RunSchedule(const ScheduleOptions& options, std::ostream& out, std::ostream& err) {
  if (absl::Status s = CheckOutput(options.out_path, {options.graph_path}); !s.ok()) {
    return Fail(err, s);
  }
  std::vector<double> explicit_values;
  for (const std::string& text : options.eps_texts) {
    absl::StatusOr<double> eps = ParseEpsilon(text);
    if (!eps.ok()) return Fail(err, eps.status());
    explicit_values.push_back(*eps);
  }
  absl::StatusOr<SignedGraph> g = LoadGraph(options.graph_path, out);
  if (!g.ok()) return Fail(err, g.status());

  absl::StatusOr<EpsilonSchedule> schedule =
      explicit_values.empty() ? MakeSchedule(*g, options.points)
                              : EpsilonSchedule::Create(explicit_values);
  if (!schedule.ok()) return Fail(err, schedule.status());

  auto start = Clock::now();
  NaoIndex index = NaoIndex::Build(*g, {options.build_threads});
  const double build_ms = MillisSince(start);
  out << "build_ms=" << Ms(build_ms) << "\n";

  std::vector<StatsRow> rows;
  double cc_total = 0.0;
  double icc_total = 0.0;
  for (double eps : *schedule) {
    ClusteringStats stats;
    std::optional<Clustering> baseline;
    std::optional<double> cc_ms;
    if (!options.icc_only) {
      start = Clock::now();
      baseline = CcBaseline(*g, eps, &stats);
      cc_ms = MillisSince(start);
      cc_total += *cc_ms;
    }
    start = Clock::now();
    // Baseline statistics are reused when available so the indexed query is
    // timed without bookkeeping.
    absl::StatusOr<Clustering> indexed =
        IccQuery(index, *g, eps, options.icc_only ? &stats : nullptr);
    const double icc_ms = MillisSince(start);
    if (!indexed.ok()) return Fail(err, indexed.status());
    icc_total += icc_ms;

    if (baseline.has_value()) {
      absl::StatusOr<bool> same = SamePartition(*baseline, *indexed);
      if (!same.ok() || !*same) {
        err << "mismatch at eps=" << FormatReal(eps) << "\n";
        return kValidationFailure;
      }
    }
    absl::StatusOr<std::uint64_t> cost = ClusteringCost(*g, *indexed);
    if (!cost.ok()) return Fail(err, cost.status());
    StatsRow row = RowFrom(eps, stats, *indexed, *cost);
    row.cc_ms = cc_ms;
    row.icc_ms = icc_ms;
    rows.push_back(row);
  }
  if (absl::Status s = WriteStatsCsv(rows, options.out_path); !s.ok()) return Fail(err, s);

  out << "points=" << rows.size() << " icc_total_ms=" << Ms(icc_total);
  if (!options.icc_only) {
    out << " cc_total_ms=" << Ms(cc_total);
    if (cc_total > 0.0) out << " icc/cc=" << Ms(icc_total / cc_total);
    out << "\nall partitions identical";
  }
  out << "\n";
  return kSuccess;
}

int RunReplay(const ReplayOptions& options, std::ostream& out, std::ostream& err) {
  if (absl::Status s = CheckOutput(options.out_path, {options.graph_path, options.stream_path});
      !s.ok()) {
    return Fail(err, s);
  }
  absl::StatusOr<SignedGraph> g = LoadGraph(options.graph_path, out);
  if (!g.ok()) return Fail(err, g.status());
  absl::StatusOr<std::vector<StreamEvent>> events = ReadUpdateStream(options.stream_path);
  if (!events.ok()) return Fail(err, events.status());

  NaoIndex index = NaoIndex::Build(*g, {options.build_threads});
  std::vector<StatsRow> rows;
  std::size_t mutations = 0;
  std::size_t recomputed = 0;
  double update_ms = 0.0;
  for (const StreamEvent& item : *events) {
    if (const auto* query = std::get_if<Query>(&item.event)) {
      ClusteringStats stats;
      const auto start = Clock::now();
      absl::StatusOr<Clustering> c = IccQuery(index, *g, query->epsilon, &stats);
      const double ms = MillisSince(start);
      if (!c.ok()) return Fail(err, c.status());
      absl::StatusOr<std::uint64_t> cost = ClusteringCost(*g, *c);
      if (!cost.ok()) return Fail(err, cost.status());
      StatsRow row = RowFrom(query->epsilon, stats, *c, *cost);
      row.icc_ms = ms;
      rows.push_back(row);
      continue;
    }
    const auto start = Clock::now();
    absl::StatusOr<IndexUpdateSummary> summary = index.Apply(*g, item.event);
    update_ms += MillisSince(start);
    if (!summary.ok()) {
      err << "error: " << options.stream_path << ":" << item.line << ": "
          << summary.status().message() << "\n";
      return kUsageError;
    }
    ++mutations;
    recomputed += summary->edges_recomputed;
    if (options.check) {
      const NaoIndex fresh = oracle::RebuildIndex(*g);
      if (std::optional<std::string> diff = NaoIndex::FirstDifference(index, fresh)) {
        err << "index diverged after " << options.stream_path << ":" << item.line << " ("
            << DescribeEvent(item.event) << "): " << *diff << "\n";
        return kValidationFailure;
      }
    }
  }
  if (absl::Status s = WriteStatsCsv(rows, options.out_path); !s.ok()) return Fail(err, s);
  out << "mutations=" << mutations << " queries=" << rows.size()
      << " edges_recomputed=" << recomputed << " update_ms=" << Ms(update_ms) << "\n";
  out << "final: vertices=" << g->num_vertices() << " edges=" << g->num_edges() << "\n";
  if (options.check) out << "index matched a fresh rebuild after every mutation\n";
  return kSuccess;
}

int RunStats(const StatsOptions& options, std::ostream& out, std::ostream& err) {
  if (absl::Status s = CheckOutput(options.out_path, {options.graph_path}); !s.ok()) {
    return Fail(err, s);
  }
  absl::StatusOr<SignedGraph> g = LoadGraph(options.graph_path, out);
  if (!g.ok()) return Fail(err, g.status());
  const DistanceStats stats = DistanceMultiset(*g);
  if (absl::Status s = WriteHistogramCsv(stats, options.out_path); !s.ok()) return Fail(err, s);
  out << "distinct=" << stats.distinct();
  if (!stats.sorted.empty()) {
    out << " min=" << FormatReal(stats.min()) << " max=" << FormatReal(stats.max());
    const auto modes = stats.TopModes(2);
    for (std::size_t i = 0; i < modes.size(); ++i) {
      out << " mode" << i + 1 << "=" << FormatReal(modes[i].first) << "x" << modes[i].second;
    }
  }
  out << "\n";
  return kSuccess;
}

namespace {

void Report(std::ostream& err, std::size_t trial, std::uint64_t seed, const SignedGraph& g,
            const std::string& what) {
  err << "counterexample: trial=" << trial << " seed=" << seed << "\n";
  err << "  " << what << "\n";
  err << "  vertices:";
  for (VertexId v : g.SortedVertices()) err << " " << v;
  err << "\n  edges:";
  for (const auto& [u, v] : g.Edges()) err << " " << u << "-" << v;
  err << "\n";
}

// Checks one graph at every schedule point; returns a description of the
// first disagreement.
std::optional<std::string> CheckQueries(const SignedGraph& g, const NaoIndex& index,
                                        const std::vector<double>& eps_values,
                                        const VerifyOptions& options) {
  for (double eps : eps_values) {
    const Clustering expected = oracle::Cluster(g, eps);
    const Clustering baseline = CcBaseline(g, eps);
    absl::StatusOr<Clustering> indexed = IccQuery(index, g, eps);
    if (!indexed.ok()) return std::string(indexed.status().message());
    if (options.corrupt_indexed) options.corrupt_indexed(*indexed);
    if (!(baseline == expected)) {
      return "eps=" + FormatReal(eps) + " baseline " + DescribePartition(baseline) +
             " oracle " + DescribePartition(expected);
    }
    if (!(*indexed == expected)) {
      return "eps=" + FormatReal(eps) + " indexed " + DescribePartition(*indexed) +
             " oracle " + DescribePartition(expected);
    }
    absl::StatusOr<std::uint64_t> cost = ClusteringCost(g, *indexed);
    absl::StatusOr<std::uint64_t> slow = oracle::ClusteringCost(g, *indexed);
    if (!cost.ok() || !slow.ok() || *cost != *slow) {
      return "eps=" + FormatReal(eps) + " cost mismatch";
    }
  }
  return std::nullopt;
}

std::optional<std::string> RunTrial(SignedGraph& g, Rng& rng, const VerifyOptions& options) {
  for (const auto& [u, v] : g.Edges()) {
    absl::StatusOr<double> fast = NonAgreement(g, u, v);
    absl::StatusOr<double> slow = oracle::NonAgreement(g, u, v);
    if (!fast.ok() || !slow.ok() || *fast != *slow) {
      return "distance of " + std::to_string(u) + "-" + std::to_string(v) + " differs";
    }
  }
  std::vector<double> eps_values = {0.0, 0.5, 1.0, 1.5, 2.0};
  if (g.num_edges() > 0) {
    absl::StatusOr<EpsilonSchedule> schedule = MakeSchedule(g, 21);
    if (!schedule.ok()) return std::string(schedule.status().message());
    eps_values.insert(eps_values.end(), schedule->begin(), schedule->end());
  }
  NaoIndex index = NaoIndex::Build(g);
  if (std::optional<std::string> bad = CheckQueries(g, index, eps_values, options)) return bad;

  const std::vector<UpdateEvent> stream = RandomUpdateStream(g, 25, StreamMix{}, rng);
  std::uniform_real_distribution<double> any_eps(0.0, 2.0);
  for (const UpdateEvent& event : stream) {
    absl::StatusOr<IndexUpdateSummary> summary = index.Apply(g, event);
    if (!summary.ok()) {
      return DescribeEvent(event) + ": " + std::string(summary.status().message());
    }
    const NaoIndex fresh = oracle::RebuildIndex(g);
    if (std::optional<std::string> diff = NaoIndex::FirstDifference(index, fresh)) {
      return "after " + DescribeEvent(event) + ": " + *diff;
    }
    if (std::optional<std::string> bad = CheckQueries(g, index, {any_eps(rng)}, options)) {
      return "after " + DescribeEvent(event) + ": " + *bad;
    }
  }
  return std::nullopt;
}

}  // namespace

int RunVerify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  Rng master(options.seed);
  std::uniform_int_distribution<std::size_t> size(2, 40);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = master();
    Rng rng(seed);
    const std::size_t n = size(rng);
    SignedGraph g = RandomGraph(n, density(rng), rng);
    const SignedGraph initial = g;
    if (std::optional<std::string> bad = RunTrial(g, rng, options)) {
      Report(err, trial, seed, initial, *bad);
      return kValidationFailure;
    }
  }
  out << "verified " << options.trials << " trials (seed " << options.seed << ")\n";
  return kSuccess;
}

}  // namespace icc::cli
