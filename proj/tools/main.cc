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

// icc: correlation clustering of signed graphs, with and without the
// neighbor-agreement ordering index.
//
// Exit status: 0 on success, 1 when a validation check fails, 2 on usage or
// input/output errors.

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  using namespace icc::cli;

  CLI::App app{"Correlation clustering of complete signed graphs"};
  app.require_subcommand(1);

  ClusterOptions cluster;
  CLI::App* cmd_cluster = app.add_subcommand("cluster", "Cluster at a single epsilon");
  cmd_cluster->add_option("-g,--graph", cluster.graph_path, "Edge list of positive edges")
      ->required();
  cmd_cluster->add_option("-e,--eps", cluster.eps_text, "Epsilon in [0, 2]")->required();
  cmd_cluster->add_option("-o,--out", cluster.out_path, "Clustering output")->required();
  cmd_cluster->add_flag("--baseline-only", cluster.baseline_only,
                        "Run the index-free algorithm only");
  cmd_cluster->add_option("--build-threads", cluster.build_threads, "Index build threads");

  ScheduleOptions schedule;
  CLI::App* cmd_schedule =
      app.add_subcommand("schedule", "Cluster at every point of an epsilon schedule");
  cmd_schedule->add_option("-g,--graph", schedule.graph_path, "Edge list")->required();
  cmd_schedule->add_option("-k,--points", schedule.points, "Schedule points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  cmd_schedule->add_option("-e,--eps", schedule.eps_texts, "Explicit epsilon values")
      ->delimiter(',');
  cmd_schedule->add_option("-o,--out", schedule.out_path, "Statistics CSV")->required();
  cmd_schedule->add_flag("--icc-only", schedule.icc_only, "Skip the index-free baseline");
  cmd_schedule->add_option("--build-threads", schedule.build_threads, "Index build threads");

  ReplayOptions replay;
  CLI::App* cmd_replay =
      app.add_subcommand("replay", "Apply an update stream to a maintained index");
  cmd_replay->add_option("-g,--graph", replay.graph_path, "Initial edge list")->required();
  cmd_replay->add_option("-s,--stream", replay.stream_path, "Update stream")->required();
  cmd_replay->add_option("-o,--out", replay.out_path, "Statistics CSV for queries")->required();
  cmd_replay->add_flag("--check", replay.check, "Compare with a rebuild after every update");
  cmd_replay->add_option("--build-threads", replay.build_threads, "Index build threads");

  StatsOptions stats;
  CLI::App* cmd_stats = app.add_subcommand("stats", "Distance histogram of the positive edges");
  cmd_stats->add_option("-g,--graph", stats.graph_path, "Edge list")->required();
  cmd_stats->add_option("-o,--out", stats.out_path, "Histogram CSV")->required();

  VerifyOptions verify;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Cross-check all algorithms on random graphs");
  cmd_verify->add_option("--seed", verify.seed, "Random seed");
  cmd_verify->add_option("--trials", verify.trials, "Number of random graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (cmd_cluster->parsed()) return RunCluster(cluster, std::cout, std::cerr);
  if (cmd_schedule->parsed()) return RunSchedule(schedule, std::cout, std::cerr);
  if (cmd_replay->parsed()) return RunReplay(replay, std::cout, std::cerr);
  if (cmd_stats->parsed()) return RunStats(stats, std::cout, std::cerr);
  return RunVerify(verify, std::cout, std::cerr);
}
