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

// Text formats.
//
//   edge list       "u v" per line; '#' comments; ',', ';' or whitespace separated.
//                   A leading non-numeric header line (as in the MUSAE CSV
//                   exports) is skipped.
//   update stream   "flip u v" | "addv v [n1 n2 ...]" | "delv v" |
//                   "query eps" per line; '#' comments.
//   clustering      "vertex<TAB>label" per vertex, ascending by vertex.
//   stats csv       eps,agree_edges,light_vertices,heavy_vertices,clusters,
//                   cost,cc_ms,icc_ms
//   histogram csv   "value,frequency" ascending, then '#'-prefixed summary.
//   index snapshot  "v: u1,d1 u2,d2 ..." per vertex in stored order.
//
// Reals are written with 17 significant digits and without locale, so they
// round-trip exactly.

#ifndef ICC_IO_H_
#define ICC_IO_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "icc/agreement.h"
#include "icc/clustering.h"
#include "icc/nao_index.h"
#include "icc/signed_graph.h"

namespace icc {

std::string FormatReal(double value);

// Decimal literal ("0.5", "1", ".25") in [0, 2]. Exponents, signs, inf and
// nan are rejected.
absl::StatusOr<double> ParseEpsilon(std::string_view text);

struct EdgeListReport {
  SignedGraph graph;
  std::size_t edge_lines = 0;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
};

absl::StatusOr<EdgeListReport> ParseEdgeList(std::istream& in, std::string_view source = "<input>");
absl::StatusOr<EdgeListReport> ReadEdgeList(const std::string& path);

struct StreamEvent {
  UpdateEvent event;
  std::size_t line = 0;
};

absl::StatusOr<std::vector<StreamEvent>> ParseUpdateStream(std::istream& in,
                                                           std::string_view source = "<input>");
absl::StatusOr<std::vector<StreamEvent>> ReadUpdateStream(const std::string& path);

void WriteClustering(const Clustering& c, std::ostream& out);
absl::Status WriteClustering(const Clustering& c, const std::string& path);

struct StatsRow {
  double eps = 0.0;
  std::size_t agree_edges = 0;
  std::size_t light_vertices = 0;
  std::size_t heavy_vertices = 0;
  std::size_t clusters = 0;
  std::uint64_t cost = 0;
  // Empty when the algorithm was not run for this row.
  std::optional<double> cc_ms;
  std::optional<double> icc_ms;
};

inline constexpr std::string_view kStatsHeader =
    "eps,agree_edges,light_vertices,heavy_vertices,clusters,cost,cc_ms,icc_ms";

void WriteStatsCsv(const std::vector<StatsRow>& rows, std::ostream& out);
absl::Status WriteStatsCsv(const std::vector<StatsRow>& rows, const std::string& path);

void WriteHistogramCsv(const DistanceStats& stats, std::ostream& out);
absl::Status WriteHistogramCsv(const DistanceStats& stats, const std::string& path);

void SnapshotIndex(const NaoIndex& index, std::ostream& out);
absl::Status SnapshotIndex(const NaoIndex& index, const std::string& path);

// DataLoss on malformed text; FailedPrecondition when the snapshot does not
// match `g` exactly.
absl::StatusOr<NaoIndex> LoadIndex(std::istream& in, const SignedGraph& g);
absl::StatusOr<NaoIndex> LoadIndex(const std::string& path, const SignedGraph& g);

}  // namespace icc

#endif  // ICC_IO_H_
