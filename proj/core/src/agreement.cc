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

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace icc {
namespace {

double EdgeDistance(const SignedGraph& g, Slot su, Slot sv) {
  const auto nu = g.NeighborsAt(su);
  const auto nv = g.NeighborsAt(sv);
  return NonAgreementFromCounts(nu.size(), nv.size(), CountCommon(nu, nv));
}

}  // namespace

absl::StatusOr<double> NonAgreement(const SignedGraph& g, VertexId u, VertexId v) {
  const Slot su = g.SlotOf(u);
  if (su == kNoSlot) return absl::NotFoundError(absl::StrCat("unknown vertex ", u));
  const Slot sv = g.SlotOf(v);
  if (sv == kNoSlot) return absl::NotFoundError(absl::StrCat("unknown vertex ", v));
  if (!g.HasEdge(u, v)) {
    return absl::InvalidArgumentError(absl::StrCat(u, "-", v, " is not a positive edge"));
  }
  return EdgeDistance(g, su, sv);
}

absl::StatusOr<bool> InAgreement(const SignedGraph& g, VertexId u, VertexId v, double eps) {
  absl::StatusOr<double> d = NonAgreement(g, u, v);
  if (!d.ok()) return d.status();
  return *d < eps;
}

absl::StatusOr<std::size_t> AgreeCount(const SignedGraph& g, VertexId v, double eps) {
  const Slot sv = g.SlotOf(v);
  if (sv == kNoSlot) return absl::NotFoundError(absl::StrCat("unknown vertex ", v));
  std::size_t count = 0;
  for (VertexId w : g.NeighborsAt(sv)) {
    if (EdgeDistance(g, sv, g.SlotOf(w)) < eps) ++count;
  }
  return count;
}

absl::StatusOr<bool> IsLight(const SignedGraph& g, VertexId v, double eps) {
  absl::StatusOr<std::size_t> count = AgreeCount(g, v, eps);
  if (!count.ok()) return count.status();
  return IsLightCount(*count, g.DegreeAt(g.SlotOf(v)), eps);
}

std::vector<std::pair<double, std::size_t>> DistanceStats::TopModes(std::size_t count) const {
  std::vector<std::pair<double, std::size_t>> modes = histogram;
  std::stable_sort(modes.begin(), modes.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (modes.size() > count) modes.resize(count);
  return modes;
}

DistanceStats DistanceMultiset(const SignedGraph& g) {
  DistanceStats stats;
  stats.sorted.reserve(g.num_edges());
  for (Slot s = 0; s < g.num_vertices(); ++s) {
    const VertexId id = g.IdAt(s);
    for (VertexId w : g.NeighborsAt(s)) {
      if (id < w) stats.sorted.push_back(EdgeDistance(g, s, g.SlotOf(w)));
    }
  }
  std::sort(stats.sorted.begin(), stats.sorted.end());
  for (double d : stats.sorted) {
    if (stats.histogram.empty() || stats.histogram.back().first != d) {
      stats.histogram.emplace_back(d, 0);
    }
    ++stats.histogram.back().second;
  }
  return stats;
}

absl::StatusOr<EpsilonSchedule> EpsilonSchedule::Create(std::vector<double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0 && values[i] <= 2.0)) {
      return absl::InvalidArgumentError(absl::StrCat("epsilon ", values[i], " outside [0, 2]"));
    }
    if (i > 0 && !(values[i - 1] < values[i])) {
      return absl::InvalidArgumentError("epsilon schedule must be strictly increasing");
    }
  }
  return EpsilonSchedule(std::move(values));
}

absl::StatusOr<EpsilonSchedule> MakeScheduleFromSorted(const std::vector<double>& sorted,
                                                       std::size_t points) {
  if (sorted.empty()) {
    return absl::FailedPreconditionError("schedule needs at least one positive edge");
  }
  if (points < 2) return absl::InvalidArgumentError("schedule needs at least 2 points");
  const std::size_t last = sorted.size() - 1;
  const std::size_t steps = points - 1;
  std::vector<double> values;
  values.reserve(points + 2);
  values.push_back(0.0);
  for (std::size_t i = 0; i < points; ++i) {
    // round(i * last / steps), halves rounded up, in exact integer arithmetic.
    const std::size_t index = (2 * i * last + steps) / (2 * steps);
    values.push_back(sorted[index]);
  }
  values.push_back(kScheduleUpperSentinel);
  // Sorting keeps the schedule increasing when a distance exceeds 1.99.
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return EpsilonSchedule::Create(std::move(values));
}

absl::StatusOr<EpsilonSchedule> MakeSchedule(const SignedGraph& g, std::size_t points) {
  if (g.num_edges() == 0) {
    return absl::FailedPreconditionError("schedule needs at least one positive edge");
  }
  return MakeScheduleFromSorted(DistanceMultiset(g).sorted, points);
}

}  // namespace icc
