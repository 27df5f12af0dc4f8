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

// Subcommands of the `icc` tool, callable without going through argv.

#ifndef ICC_TOOLS_COMMANDS_H_
#define ICC_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "icc/clustering.h"

namespace icc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,
};

struct ClusterOptions {
  std::string graph_path;
  std::string eps_text;
  std::string out_path;
  bool baseline_only = false;
  unsigned build_threads = 1;
};

struct ScheduleOptions {
  std::string graph_path;
  std::size_t points = 21;
  // Explicit epsilon values; when non-empty they replace the generated
  // schedule.
  std::vector<std::string> eps_texts;
  std::string out_path;
  bool icc_only = false;
  unsigned build_threads = 1;
};

struct ReplayOptions {
  std::string graph_path;
  std::string stream_path;
  std::string out_path;
  // Compare the maintained index with a fresh rebuild after every event.
  bool check = false;
  unsigned build_threads = 1;
};

struct StatsOptions {
  std::string graph_path;
  std::string out_path;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  // Test hook: applied to every indexed clustering before it is compared.
  std::function<void(Clustering&)> corrupt_indexed;
};

int RunCluster(const ClusterOptions& options, std::ostream& out, std::ostream& err);
int RunSchedule(const ScheduleOptions& options, std::ostream& out, std::ostream& err);
int RunReplay(const ReplayOptions& options, std::ostream& out, std::ostream& err);
int RunStats(const StatsOptions& options, std::ostream& out, std::ostream& err);
int RunVerify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace icc::cli

#endif  // ICC_TOOLS_COMMANDS_H_
