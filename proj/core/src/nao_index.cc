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

#include "icc/nao_index.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>

#include "absl/strings/str_cat.h"
#include "icc/agreement.h"

namespace icc {
namespace {

bool NeighborLess(const NaoEntry& a, const NaoEntry& b) { return a.neighbor < b.neighbor; }

// Runs fn(begin, end) over [0, n) split into contiguous chunks.
template <typename Fn>
void ParallelFor(std::size_t n, unsigned threads, Fn fn) {
  if (threads <= 1 || n < 2 * threads) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& w : workers) w.join();
}

double GraphDistance(const SignedGraph& g, Slot su, Slot sv) {
  const auto nu = g.NeighborsAt(su);
  const auto nv = g.NeighborsAt(sv);
  return NonAgreementFromCounts(nu.size(), nv.size(), CountCommon(nu, nv));
}

absl::Status StaleIndex(const GraphVersion& have, const GraphVersion& want) {
  return absl::FailedPreconditionError(
      absl::StrCat("index is stale: built for graph ", have.instance, " revision ", have.revision,
                   ", graph is ", want.instance, " revision ", want.revision));
}

}  // namespace

NaoIndex NaoIndex::Build(const SignedGraph& g, BuildOptions options) {
  NaoIndex index;
  const std::size_t n = g.num_vertices();
  index.slots_.Reserve(n);
  for (Slot s = 0; s < n; ++s) index.slots_.Add(g.IdAt(s));
  index.lists_.resize(n);

  // Phase 1: each edge is computed once, by its smaller-id endpoint, into
  // that endpoint's companion list.
  ParallelFor(n, options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      const VertexId id = g.IdAt(static_cast<Slot>(s));
      const auto adjacency = g.NeighborsAt(static_cast<Slot>(s));
      auto& companion = index.lists_[s].by_neighbor;
      companion.resize(adjacency.size());
      for (std::size_t j = 0; j < adjacency.size(); ++j) {
        const VertexId w = adjacency[j];
        companion[j].neighbor = w;
        companion[j].distance = id < w ? GraphDistance(g, static_cast<Slot>(s), g.SlotOf(w))
                                       : std::numeric_limits<double>::quiet_NaN();
      }
    }
  });

  // Phase 2: fill the mirrored half. Visiting owners in ascending id order
  // means each vertex receives its smaller-id neighbours in list order, so a
  // per-vertex cursor gives the position without a search.
  std::vector<Slot> by_id(n);
  for (Slot s = 0; s < n; ++s) by_id[s] = s;
  if (!g.slots().sorted_by_id()) {
    std::sort(by_id.begin(), by_id.end(), [&g](Slot a, Slot b) { return g.IdAt(a) < g.IdAt(b); });
  }
  std::vector<std::uint32_t> cursor(n, 0);
  for (Slot s : by_id) {
    const VertexId id = g.IdAt(s);
    const auto& companion = index.lists_[s].by_neighbor;
    auto it = std::upper_bound(companion.begin(), companion.end(), NaoEntry{id, 0.0}, NeighborLess);
    for (; it != companion.end(); ++it) {
      const Slot t = g.SlotOf(it->neighbor);
      index.lists_[t].by_neighbor[cursor[t]++].distance = it->distance;
    }
  }

  // Phase 3: sort.
  ParallelFor(n, options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      auto& lists = index.lists_[s];
      lists.ordered = lists.by_neighbor;
      std::sort(lists.ordered.begin(), lists.ordered.end(), NaoLess);
    }
  });

  index.total_entries_ = 2 * g.num_edges();
  index.version_ = g.version();
  return index;
}

absl::StatusOr<NaoIndex> NaoIndex::FromOrderings(
    const SignedGraph& g, std::vector<std::pair<VertexId, std::vector<NaoEntry>>> orderings) {
  if (orderings.size() != g.num_vertices()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "index has ", orderings.size(), " vertices, graph has ", g.num_vertices()));
  }
  NaoIndex index;
  index.slots_.Reserve(g.num_vertices());
  for (Slot s = 0; s < g.num_vertices(); ++s) index.slots_.Add(g.IdAt(s));
  index.lists_.resize(g.num_vertices());
  std::vector<bool> seen(g.num_vertices(), false);
  for (auto& [v, ordered] : orderings) {
    const Slot s = index.slots_.Find(v);
    if (s == kNoSlot) {
      return absl::FailedPreconditionError(absl::StrCat("vertex ", v, " not in graph"));
    }
    if (seen[s]) return absl::FailedPreconditionError(absl::StrCat("vertex ", v, " repeated"));
    seen[s] = true;
    index.total_entries_ += ordered.size();
    auto& lists = index.lists_[s];
    lists.by_neighbor = ordered;
    std::sort(lists.by_neighbor.begin(), lists.by_neighbor.end(), NeighborLess);
    lists.ordered = std::move(ordered);
  }
  if (absl::Status st = index.CheckConsistency(g); !st.ok()) {
    return absl::FailedPreconditionError(
        absl::StrCat("index does not match graph: ", st.message()));
  }
  index.version_ = g.version();
  return index;
}

absl::Status NaoIndex::CheckFresh(const SignedGraph& g) const {
  if (version_ != g.version()) return StaleIndex(version_, g.version());
  return absl::OkStatus();
}

absl::StatusOr<std::span<const NaoEntry>> NaoIndex::Ordering(VertexId v) const {
  const Slot s = slots_.Find(v);
  if (s == kNoSlot) return absl::NotFoundError(absl::StrCat("unknown vertex ", v));
  return std::span<const NaoEntry>(lists_[s].ordered);
}

std::optional<double> NaoIndex::Distance(VertexId u, VertexId v) const {
  const Slot s = slots_.Find(u);
  if (s == kNoSlot) return std::nullopt;
  const auto& companion = lists_[s].by_neighbor;
  auto it = std::lower_bound(companion.begin(), companion.end(), NaoEntry{v, 0.0}, NeighborLess);
  if (it == companion.end() || it->neighbor != v) return std::nullopt;
  return it->distance;
}

std::size_t NaoIndex::LightnessThreshold(std::size_t degree, double eps) {
  return static_cast<std::size_t>(std::ceil(LightnessMass(eps, degree))) + 1;
}

bool NaoIndex::IsHeavyAt(Slot s, double eps) const {
  const auto& ordered = lists_[s].ordered;
  // Rank 1 is the vertex itself, so the deciding stored entry is rank - 1.
  const std::size_t needed = LightnessThreshold(ordered.size(), eps) - 1;
  if (needed == 0) return true;
  if (needed > ordered.size()) return false;
  return ordered[needed - 1].distance < eps;
}

absl::StatusOr<bool> NaoIndex::IsHeavy(const SignedGraph& g, VertexId v, double eps) const {
  if (absl::Status st = CheckFresh(g); !st.ok()) return st;
  const Slot s = slots_.Find(v);
  if (s == kNoSlot) return absl::NotFoundError(absl::StrCat("unknown vertex ", v));
  return IsHeavyAt(s, eps);
}

std::size_t NaoIndex::AgreePrefixAt(Slot s, double eps) const {
  const auto& ordered = lists_[s].ordered;
  return static_cast<std::size_t>(
      std::partition_point(ordered.begin(), ordered.end(),
                           [eps](const NaoEntry& e) { return e.distance < eps; }) -
      ordered.begin());
}

Slot NaoIndex::AddSlot(VertexId v) {
  const Slot s = slots_.Add(v);
  lists_.emplace_back();
  return s;
}

void NaoIndex::RemoveSlot(VertexId v) {
  const Slot s = slots_.Find(v);
  total_entries_ -= lists_[s].ordered.size();
  const VertexSlots::Removal removal = slots_.Remove(v);
  if (removal.moved_from) lists_[removal.vacated] = std::move(lists_[*removal.moved_from]);
  lists_.pop_back();
}

void NaoIndex::Insert(Slot s, NaoEntry entry) {
  auto& lists = lists_[s];
  lists.ordered.insert(
      std::lower_bound(lists.ordered.begin(), lists.ordered.end(), entry, NaoLess), entry);
  lists.by_neighbor.insert(
      std::lower_bound(lists.by_neighbor.begin(), lists.by_neighbor.end(), entry, NeighborLess),
      entry);
  ++total_entries_;
}

void NaoIndex::Erase(Slot s, VertexId neighbor) {
  auto& lists = lists_[s];
  auto it = std::lower_bound(lists.by_neighbor.begin(), lists.by_neighbor.end(),
                             NaoEntry{neighbor, 0.0}, NeighborLess);
  const NaoEntry old = *it;
  lists.by_neighbor.erase(it);
  lists.ordered.erase(std::lower_bound(lists.ordered.begin(), lists.ordered.end(), old, NaoLess));
  --total_entries_;
}

bool NaoIndex::Reposition(Slot s, VertexId neighbor, double distance) {
  auto& lists = lists_[s];
  auto it = std::lower_bound(lists.by_neighbor.begin(), lists.by_neighbor.end(),
                             NaoEntry{neighbor, 0.0}, NeighborLess);
  const NaoEntry old = *it;
  if (old.distance == distance) return false;
  it->distance = distance;

  const NaoEntry moved{neighbor, distance};
  auto& ordered = lists.ordered;
  auto pos = std::lower_bound(ordered.begin(), ordered.end(), old, NaoLess);
  if (NaoLess(old, moved)) {
    auto target = std::lower_bound(pos + 1, ordered.end(), moved, NaoLess);
    std::rotate(pos, pos + 1, target);
    *(target - 1) = moved;
  } else {
    auto target = std::lower_bound(ordered.begin(), pos, moved, NaoLess);
    std::rotate(target, pos, pos + 1);
    *target = moved;
  }
  return true;
}

void NaoIndex::Refresh(const SignedGraph& g, VertexId x, VertexId w,
                       IndexUpdateSummary& summary) {
  const double d = GraphDistance(g, g.SlotOf(x), g.SlotOf(w));
  ++summary.edges_recomputed;
  if (Reposition(slots_.Find(x), w, d)) ++summary.entries_changed;
  if (Reposition(slots_.Find(w), x, d)) ++summary.entries_changed;
}

absl::StatusOr<IndexUpdateSummary> NaoIndex::FlipEdge(SignedGraph& g, VertexId u, VertexId v) {
  if (absl::Status st = CheckFresh(g); !st.ok()) return st;
  const bool was_positive = g.HasEdge(u, v);
  if (absl::StatusOr<MutationSummary> applied = g.Apply(icc::FlipEdge{u, v}); !applied.ok()) {
    return applied.status();
  }
  IndexUpdateSummary summary;
  const Slot su = slots_.Find(u);
  const Slot sv = slots_.Find(v);
  if (was_positive) {
    Erase(su, v);
    Erase(sv, u);
  } else {
    const double d = GraphDistance(g, g.SlotOf(u), g.SlotOf(v));
    ++summary.edges_recomputed;
    Insert(su, {v, d});
    Insert(sv, {u, d});
  }
  summary.entries_changed += 2;

  // Only N(u) and N(v) changed, so only edges incident to u or v move.
  for (VertexId w : g.NeighborsAt(g.SlotOf(u))) {
    if (w != v) Refresh(g, u, w, summary);
  }
  for (VertexId w : g.NeighborsAt(g.SlotOf(v))) {
    if (w != u) Refresh(g, v, w, summary);
  }
  version_ = g.version();
  return summary;
}

absl::StatusOr<IndexUpdateSummary> NaoIndex::AddVertex(SignedGraph& g, VertexId x,
                                                       std::span<const VertexId> neighbors) {
  if (absl::Status st = CheckFresh(g); !st.ok()) return st;
  icc::AddVertex event{x, std::vector<VertexId>(neighbors.begin(), neighbors.end())};
  if (absl::StatusOr<MutationSummary> applied = g.Apply(event); !applied.ok()) {
    return applied.status();
  }
  IndexUpdateSummary summary;
  const Slot gx = g.SlotOf(x);
  const auto added = g.NeighborsAt(gx);
  const Slot sx = AddSlot(x);
  if (added.empty()) {
    version_ = g.version();
    return summary;
  }

  auto& companion = lists_[sx].by_neighbor;
  companion.reserve(added.size());
  for (VertexId w : added) {
    const double d = GraphDistance(g, gx, g.SlotOf(w));
    companion.push_back({w, d});
    Insert(slots_.Find(w), {x, d});
  }
  lists_[sx].ordered = companion;
  std::sort(lists_[sx].ordered.begin(), lists_[sx].ordered.end(), NaoLess);
  total_entries_ += added.size();
  summary.edges_recomputed += added.size();
  summary.entries_changed += 2 * added.size();

  // Every neighbor of x changed degree and neighborhood; their other edges
  // are recomputed once each.
  for (VertexId y : added) {
    for (VertexId w : g.NeighborsAt(g.SlotOf(y))) {
      if (w == x) continue;
      if (w < y && std::binary_search(added.begin(), added.end(), w)) continue;
      Refresh(g, y, w, summary);
    }
  }
  version_ = g.version();
  return summary;
}

absl::StatusOr<IndexUpdateSummary> NaoIndex::RemoveVertex(SignedGraph& g, VertexId x) {
  if (absl::Status st = CheckFresh(g); !st.ok()) return st;
  absl::StatusOr<MutationSummary> applied = g.Apply(icc::RemoveVertex{x});
  if (!applied.ok()) return applied.status();
  // For removals the summary holds the former neighbors, ascending.
  const std::vector<VertexId>& former = applied->degrees_touched;

  IndexUpdateSummary summary;
  for (VertexId y : former) Erase(slots_.Find(y), x);
  RemoveSlot(x);
  summary.entries_changed += 2 * former.size();

  for (VertexId y : former) {
    for (VertexId w : g.NeighborsAt(g.SlotOf(y))) {
      if (w < y && std::binary_search(former.begin(), former.end(), w)) continue;
      Refresh(g, y, w, summary);
    }
  }
  version_ = g.version();
  return summary;
}

absl::StatusOr<IndexUpdateSummary> NaoIndex::Apply(SignedGraph& g, const UpdateEvent& event) {
  if (const auto* flip = std::get_if<icc::FlipEdge>(&event)) return FlipEdge(g, flip->u, flip->v);
  if (const auto* add = std::get_if<icc::AddVertex>(&event)) {
    return AddVertex(g, add->v, add->neighbors);
  }
  if (const auto* remove = std::get_if<icc::RemoveVertex>(&event)) return RemoveVertex(g, remove->v);
  if (absl::Status st = CheckFresh(g); !st.ok()) return st;
  if (absl::Status st = g.Validate(event); !st.ok()) return st;
  return IndexUpdateSummary{};
}

absl::Status NaoIndex::CheckConsistency(const SignedGraph& g) const {
  if (slots_.size() != g.num_vertices() || lists_.size() != slots_.size()) {
    return absl::InternalError(absl::StrCat("index has ", slots_.size(), " vertices, graph has ",
                                            g.num_vertices()));
  }
  if (total_entries_ != 2 * g.num_edges()) {
    return absl::InternalError(absl::StrCat("index holds ", total_entries_,
                                            " entries, expected 2m = ", 2 * g.num_edges()));
  }
  std::size_t counted = 0;
  for (Slot s = 0; s < lists_.size(); ++s) {
    const VertexId v = slots_.IdAt(s);
    const Slot gs = g.SlotOf(v);
    if (gs == kNoSlot) return absl::InternalError(absl::StrCat("vertex ", v, " not in graph"));
    const auto& lists = lists_[s];
    const auto adjacency = g.NeighborsAt(gs);
    counted += lists.ordered.size();
    if (lists.ordered.size() != adjacency.size() || lists.by_neighbor.size() != adjacency.size()) {
      return absl::InternalError(absl::StrCat("list of ", v, " has ", lists.ordered.size(),
                                              " entries, degree is ", adjacency.size()));
    }
    for (std::size_t j = 0; j < adjacency.size(); ++j) {
      const NaoEntry& e = lists.by_neighbor[j];
      if (e.neighbor != adjacency[j]) {
        return absl::InternalError(absl::StrCat("companion of ", v, " lists ", e.neighbor,
                                                " where neighbor ", adjacency[j], " expected"));
      }
      const double expected = GraphDistance(g, gs, g.SlotOf(e.neighbor));
      if (e.distance != expected) {
        return absl::InternalError(absl::StrCat("distance ", v, "-", e.neighbor, " is ",
                                                e.distance, ", recomputed ", expected));
      }
    }
    for (std::size_t j = 1; j < lists.ordered.size(); ++j) {
      if (!NaoLess(lists.ordered[j - 1], lists.ordered[j])) {
        return absl::InternalError(absl::StrCat("ordering of ", v, " not sorted at rank ", j));
      }
    }
    std::vector<NaoEntry> resorted = lists.ordered;
    std::sort(resorted.begin(), resorted.end(), NeighborLess);
    if (resorted != lists.by_neighbor) {
      return absl::InternalError(absl::StrCat("ordering and companion of ", v, " disagree"));
    }
  }
  if (counted != total_entries_) {
    return absl::InternalError(
        absl::StrCat("entry counter ", total_entries_, " but lists hold ", counted));
  }
  return absl::OkStatus();
}

std::optional<std::string> NaoIndex::FirstDifference(const NaoIndex& a, const NaoIndex& b) {
  if (a.num_vertices() != b.num_vertices()) {
    return absl::StrCat("vertex counts differ: ", a.num_vertices(), " vs ", b.num_vertices());
  }
  for (Slot s = 0; s < a.lists_.size(); ++s) {
    const VertexId v = a.slots_.IdAt(s);
    const Slot t = b.slots_.Find(v);
    if (t == kNoSlot) return absl::StrCat("vertex ", v, " missing from second index");
    const auto& x = a.lists_[s].ordered;
    const auto& y = b.lists_[t].ordered;
    if (x.size() != y.size()) {
      return absl::StrCat("vertex ", v, ": ", x.size(), " vs ", y.size(), " entries");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(x[i] == y[i])) {
        return absl::StrCat("vertex ", v, " rank ", i, ": (", x[i].neighbor, ", ", x[i].distance,
                            ") vs (", y[i].neighbor, ", ", y[i].distance, ")");
      }
    }
    if (a.lists_[s].by_neighbor != b.lists_[t].by_neighbor) {
      return absl::StrCat("vertex ", v, ": companion lists differ");
    }
  }
  return std::nullopt;
}

bool operator==(const NaoIndex& a, const NaoIndex& b) {
  return !NaoIndex::FirstDifference(a, b).has_value();
}

}  // namespace icc
