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
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace icc {
namespace {

// The system abseil is built with its own string_view type.
absl::string_view AV(std::string_view s) { return absl::string_view(s.data(), s.size()); }

std::vector<std::string_view> Tokens(std::string_view line, std::string_view delimiters) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t begin = line.find_first_not_of(delimiters, pos);
    if (begin == std::string_view::npos) break;
    std::size_t end = line.find_first_of(delimiters, begin);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(begin, end - begin));
    pos = end;
  }
  return tokens;
}

std::string_view Strip(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const std::size_t begin = text.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  return text.substr(begin, text.find_last_not_of(kSpace) - begin + 1);
}

// Strips a trailing '#' comment and surrounding whitespace.
std::string_view Content(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return Strip(line);
}

std::optional<VertexId> ParseId(std::string_view text) {
  VertexId value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::optional<double> ParseReal(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

absl::Status LineError(std::string_view source, std::size_t line, std::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat(AV(source), ":", line, ": ", AV(what)));
}

template <typename Writer>
absl::Status WriteFile(const std::string& path, Writer writer) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot open ", path, " for writing"));
  writer(out);
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("write to ", path, " failed"));
  return absl::OkStatus();
}

absl::StatusOr<std::ifstream> OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return in;
}

}  // namespace

std::string FormatReal(double value) {
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::general, 17);
  return std::string(buffer, ptr);
}

absl::StatusOr<double> ParseEpsilon(std::string_view text) {
  std::size_t digits = 0;
  std::size_t dots = 0;
  for (char c : text) {
    if (c == '.') {
      ++dots;
    } else if (absl::ascii_isdigit(static_cast<unsigned char>(c))) {
      ++digits;
    } else {
      digits = 0;
      break;
    }
  }
  if (digits == 0 || dots > 1) {
    return absl::InvalidArgumentError(absl::StrCat("epsilon '", AV(text), "' is not a decimal number"));
  }
  std::optional<double> value = ParseReal(text);
  if (!value) {
    return absl::InvalidArgumentError(absl::StrCat("epsilon '", AV(text), "' is not a decimal number"));
  }
  if (*value > 2.0) {
    return absl::InvalidArgumentError(absl::StrCat("epsilon ", AV(text), " outside [0, 2]"));
  }
  return *value;
}

absl::StatusOr<EdgeListReport> ParseEdgeList(std::istream& in, std::string_view source) {
  EdgeListReport report;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> loop_vertices;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = Content(line);
    if (content.empty()) continue;
    const auto fields = Tokens(content, " \t\r,;");
    if (!seen_data && std::any_of(content.begin(), content.end(), [](char c) {
          return absl::ascii_isalpha(static_cast<unsigned char>(c));
        })) {
      seen_data = true;  // header row
      continue;
    }
    seen_data = true;
    if (fields.size() != 2) {
      return LineError(source, line_no,
                       absl::StrCat("expected 2 vertex ids, found ", fields.size(), " fields"));
    }
    const std::optional<VertexId> u = ParseId(fields[0]);
    const std::optional<VertexId> v = ParseId(fields[1]);
    if (!u || !v) return LineError(source, line_no, "vertex ids must be non-negative integers");
    ++report.edge_lines;
    if (*u == *v) {
      ++report.self_loops;
      loop_vertices.push_back(*u);
      continue;
    }
    edges.emplace_back(std::min(*u, *v), std::max(*u, *v));
  }
  if (in.bad()) return absl::DataLossError(absl::StrCat("read error in ", AV(source)));
  report.graph = SignedGraph::FromEdges(edges, loop_vertices);
  report.duplicates = edges.size() - report.graph.num_edges();
  return report;
}

absl::StatusOr<EdgeListReport> ReadEdgeList(const std::string& path) {
  absl::StatusOr<std::ifstream> in = OpenInput(path);
  if (!in.ok()) return in.status();
  return ParseEdgeList(*in, path);
}

absl::StatusOr<std::vector<StreamEvent>> ParseUpdateStream(std::istream& in,
                                                           std::string_view source) {
  std::vector<StreamEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = Content(line);
    if (content.empty()) continue;
    const auto fields = Tokens(content, " \t\r");
    const std::string_view op = fields[0];

    std::vector<VertexId> ids;
    if (op != "query") {
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const std::optional<VertexId> id = ParseId(fields[i]);
        if (!id) {
          return LineError(source, line_no, absl::StrCat("bad vertex id '", AV(fields[i]), "'"));
        }
        ids.push_back(*id);
      }
    }

    StreamEvent ev{FlipEdge{}, line_no};
    if (op == "flip") {
      if (ids.size() != 2) return LineError(source, line_no, "flip takes exactly 2 vertex ids");
      if (ids[0] == ids[1]) return LineError(source, line_no, "flip endpoints must differ");
      ev.event = FlipEdge{ids[0], ids[1]};
    } else if (op == "addv") {
      if (ids.empty()) return LineError(source, line_no, "addv needs a vertex id");
      std::vector<VertexId> neighbors(ids.begin() + 1, ids.end());
      if (std::find(neighbors.begin(), neighbors.end(), ids[0]) != neighbors.end()) {
        return LineError(source, line_no, "addv lists the new vertex as its own neighbor");
      }
      ev.event = AddVertex{ids[0], std::move(neighbors)};
    } else if (op == "delv") {
      if (ids.size() != 1) return LineError(source, line_no, "delv takes exactly 1 vertex id");
      ev.event = RemoveVertex{ids[0]};
    } else if (op == "query") {
      if (fields.size() != 2) return LineError(source, line_no, "query takes exactly 1 epsilon");
      absl::StatusOr<double> eps = ParseEpsilon(fields[1]);
      if (!eps.ok()) return LineError(source, line_no, std::string(eps.status().message()));
      ev.event = Query{*eps};
    } else {
      return LineError(source, line_no, absl::StrCat("unknown operation '", AV(op), "'"));
    }
    events.push_back(std::move(ev));
  }
  if (in.bad()) return absl::DataLossError(absl::StrCat("read error in ", AV(source)));
  return events;
}

absl::StatusOr<std::vector<StreamEvent>> ReadUpdateStream(const std::string& path) {
  absl::StatusOr<std::ifstream> in = OpenInput(path);
  if (!in.ok()) return in.status();
  return ParseUpdateStream(*in, path);
}

void WriteClustering(const Clustering& c, std::ostream& out) {
  for (auto [v, label] : c.assignment()) out << v << '\t' << label << '\n';
}

absl::Status WriteClustering(const Clustering& c, const std::string& path) {
  return WriteFile(path, [&](std::ostream& out) { WriteClustering(c, out); });
}

void WriteStatsCsv(const std::vector<StatsRow>& rows, std::ostream& out) {
  auto millis = [](const std::optional<double>& ms) {
    if (!ms) return std::string();
    char buffer[32];
    auto [ptr, ec] =
        std::to_chars(buffer, buffer + sizeof(buffer), *ms, std::chars_format::fixed, 3);
    return std::string(buffer, ptr);
  };
  out << kStatsHeader << '\n';
  for (const StatsRow& r : rows) {
    out << FormatReal(r.eps) << ',' << r.agree_edges << ',' << r.light_vertices << ','
        << r.heavy_vertices << ',' << r.clusters << ',' << r.cost << ',' << millis(r.cc_ms) << ','
        << millis(r.icc_ms) << '\n';
  }
}

absl::Status WriteStatsCsv(const std::vector<StatsRow>& rows, const std::string& path) {
  return WriteFile(path, [&](std::ostream& out) { WriteStatsCsv(rows, out); });
}

void WriteHistogramCsv(const DistanceStats& stats, std::ostream& out) {
  out << "value,frequency\n";
  for (auto [value, frequency] : stats.histogram) {
    out << FormatReal(value) << ',' << frequency << '\n';
  }
  out << "# edges," << stats.sorted.size() << '\n';
  out << "# distinct," << stats.distinct() << '\n';
  if (stats.sorted.empty()) return;
  out << "# min," << FormatReal(stats.min()) << '\n';
  out << "# max," << FormatReal(stats.max()) << '\n';
  const auto modes = stats.TopModes(2);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    out << "# mode" << i + 1 << ',' << FormatReal(modes[i].first) << ',' << modes[i].second
        << '\n';
  }
}

absl::Status WriteHistogramCsv(const DistanceStats& stats, const std::string& path) {
  return WriteFile(path, [&](std::ostream& out) { WriteHistogramCsv(stats, out); });
}

void SnapshotIndex(const NaoIndex& index, std::ostream& out) {
  std::vector<VertexId> ids(index.slots().ids().begin(), index.slots().ids().end());
  std::sort(ids.begin(), ids.end());
  out << "# nao-index vertices=" << ids.size() << " entries=" << index.total_entries() << '\n';
  for (VertexId v : ids) {
    out << v << ':';
    for (const NaoEntry& e : index.OrderingAt(index.slots().Find(v))) {
      out << ' ' << e.neighbor << ',' << FormatReal(e.distance);
    }
    out << '\n';
  }
}

absl::Status SnapshotIndex(const NaoIndex& index, const std::string& path) {
  return WriteFile(path, [&](std::ostream& out) { SnapshotIndex(index, out); });
}

absl::StatusOr<NaoIndex> LoadIndex(std::istream& in, const SignedGraph& g) {
  std::vector<std::pair<VertexId, std::vector<NaoEntry>>> orderings;
  std::string line;
  std::size_t line_no = 0;
  auto corrupt = [&](std::string_view what) {
    return absl::DataLossError(absl::StrCat("index snapshot line ", line_no, ": ", AV(what)));
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = Content(line);
    if (content.empty()) continue;
    const auto colon = content.find(':');
    if (colon == std::string_view::npos) return corrupt("missing ':'");
    const std::optional<VertexId> v = ParseId(Strip(content.substr(0, colon)));
    if (!v) return corrupt("bad vertex id");
    std::vector<NaoEntry> entries;
    for (std::string_view token : Tokens(content.substr(colon + 1), " \t\r")) {
      const auto comma = token.find(',');
      if (comma == std::string_view::npos) return corrupt("entry without ','");
      const std::optional<VertexId> u = ParseId(token.substr(0, comma));
      const std::optional<double> d = ParseReal(token.substr(comma + 1));
      if (!u || !d) return corrupt(absl::StrCat("bad entry '", AV(token), "'"));
      entries.push_back({*u, *d});
    }
    orderings.emplace_back(*v, std::move(entries));
  }
  if (in.bad()) return absl::DataLossError("read error in index snapshot");
  return NaoIndex::FromOrderings(g, std::move(orderings));
}

absl::StatusOr<NaoIndex> LoadIndex(const std::string& path, const SignedGraph& g) {
  absl::StatusOr<std::ifstream> in = OpenInput(path);
  if (!in.ok()) return in.status();
  return LoadIndex(*in, g);
}

}  // namespace icc
