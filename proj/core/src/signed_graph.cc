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

#include "icc/signed_graph.h"

#include <algorithm>
#include <atomic>

#include "absl/strings/str_cat.h"

namespace icc {
namespace {

// Above this length ratio, binary probing beats a linear merge.
constexpr std::size_t kProbeRatio = 16;

std::uint64_t NextInstanceId() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

absl::Status UnknownVertex(VertexId v) {
  return absl::NotFoundError(absl::StrCat("unknown vertex ", v));
}

}  // namespace

std::size_t CountCommon(std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return 0;
  std::size_t common = 0;
  if (b.size() > kProbeRatio * a.size()) {
    auto lo = b.begin();
    for (VertexId x : a) {
      lo = std::lower_bound(lo, b.end(), x);
      if (lo == b.end()) break;
      if (*lo == x) {
        ++common;
        ++lo;
      }
    }
    return common;
  }
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

SignedGraph::SignedGraph() : instance_(NextInstanceId()) {}

SignedGraph::SignedGraph(const SignedGraph& other)
    : slots_(other.slots_),
      adjacency_(other.adjacency_),
      num_edges_(other.num_edges_),
      instance_(NextInstanceId()),
      revision_(0) {}

SignedGraph& SignedGraph::operator=(const SignedGraph& other) {
  if (this != &other) {
    slots_ = other.slots_;
    adjacency_ = other.adjacency_;
    num_edges_ = other.num_edges_;
    instance_ = NextInstanceId();
    revision_ = 0;
  }
  return *this;
}

SignedGraph SignedGraph::FromEdges(
    std::span<const std::pair<VertexId, VertexId>> edges,
    std::span<const VertexId> isolated) {
  std::vector<std::pair<VertexId, VertexId>> canon;
  canon.reserve(edges.size());
  std::vector<VertexId> ids(isolated.begin(), isolated.end());
  ids.reserve(isolated.size() + 2 * edges.size());
  for (auto [u, v] : edges) {
    ids.push_back(u);
    ids.push_back(v);
    if (u == v) continue;
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  SignedGraph g;
  g.slots_.Reserve(ids.size());
  for (VertexId id : ids) g.slots_.Add(id);
  g.adjacency_.resize(ids.size());

  std::vector<std::size_t> degree(ids.size(), 0);
  for (auto [u, v] : canon) {
    ++degree[g.slots_.Find(u)];
    ++degree[g.slots_.Find(v)];
  }
  for (std::size_t s = 0; s < ids.size(); ++s) g.adjacency_[s].reserve(degree[s]);
  // `canon` is sorted by (u, v), so every list receives its smaller
  // neighbors in ascending order before its larger ones.
  for (auto [u, v] : canon) {
    g.adjacency_[g.slots_.Find(u)].push_back(v);
    g.adjacency_[g.slots_.Find(v)].push_back(u);
  }
  g.num_edges_ = canon.size();
  return g;
}

bool SignedGraph::HasEdge(VertexId u, VertexId v) const {
  const Slot su = slots_.Find(u);
  if (su == kNoSlot || !slots_.Contains(v)) return false;
  const auto& list = adjacency_[su];
  return std::binary_search(list.begin(), list.end(), v);
}

absl::StatusOr<std::span<const VertexId>> SignedGraph::Neighbors(VertexId v) const {
  const Slot s = slots_.Find(v);
  if (s == kNoSlot) return UnknownVertex(v);
  return std::span<const VertexId>(adjacency_[s]);
}

absl::StatusOr<std::size_t> SignedGraph::Degree(VertexId v) const {
  const Slot s = slots_.Find(v);
  if (s == kNoSlot) return UnknownVertex(v);
  return adjacency_[s].size();
}

absl::StatusOr<std::size_t> SignedGraph::IntersectionSize(VertexId u, VertexId v) const {
  const Slot su = slots_.Find(u);
  if (su == kNoSlot) return UnknownVertex(u);
  const Slot sv = slots_.Find(v);
  if (sv == kNoSlot) return UnknownVertex(v);
  return CountCommon(adjacency_[su], adjacency_[sv]);
}

std::vector<VertexId> SignedGraph::SortedVertices() const {
  std::vector<VertexId> ids(slots_.ids().begin(), slots_.ids().end());
  if (!slots_.sorted_by_id()) std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::pair<VertexId, VertexId>> SignedGraph::Edges() const {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(num_edges_);
  for (VertexId u : SortedVertices()) {
    for (VertexId v : adjacency_[slots_.Find(u)]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

absl::Status SignedGraph::Validate(const UpdateEvent& event) const {
  if (const auto* flip = std::get_if<FlipEdge>(&event)) {
    if (flip->u == flip->v) {
      return absl::InvalidArgumentError(
          absl::StrCat("flip endpoints must differ, got ", flip->u, " twice"));
    }
    if (!HasVertex(flip->u)) return UnknownVertex(flip->u);
    if (!HasVertex(flip->v)) return UnknownVertex(flip->v);
    return absl::OkStatus();
  }
  if (const auto* add = std::get_if<AddVertex>(&event)) {
    if (HasVertex(add->v)) {
      return absl::AlreadyExistsError(absl::StrCat("vertex ", add->v, " already exists"));
    }
    for (VertexId w : add->neighbors) {
      if (w == add->v) {
        return absl::InvalidArgumentError(
            absl::StrCat("vertex ", w, " listed as its own neighbor"));
      }
      if (!HasVertex(w)) return UnknownVertex(w);
    }
    return absl::OkStatus();
  }
  if (const auto* remove = std::get_if<RemoveVertex>(&event)) {
    if (!HasVertex(remove->v)) return UnknownVertex(remove->v);
    return absl::OkStatus();
  }
  const double eps = std::get<Query>(event).epsilon;
  if (!(eps >= 0.0 && eps <= 2.0)) {
    return absl::InvalidArgumentError(absl::StrCat("epsilon ", eps, " outside [0, 2]"));
  }
  return absl::OkStatus();
}

void SignedGraph::ToggleEdge(Slot su, Slot sv, bool add) {
  auto toggle = [add](std::vector<VertexId>& list, VertexId x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (add) {
      list.insert(it, x);
    } else {
      list.erase(it);
    }
  };
  toggle(adjacency_[su], slots_.IdAt(sv));
  toggle(adjacency_[sv], slots_.IdAt(su));
  if (add) {
    ++num_edges_;
  } else {
    --num_edges_;
  }
}

absl::StatusOr<MutationSummary> SignedGraph::Apply(const UpdateEvent& event) {
  if (absl::Status st = Validate(event); !st.ok()) return st;
  MutationSummary summary;
  if (std::holds_alternative<Query>(event)) return summary;
  ++revision_;

  if (const auto* flip = std::get_if<FlipEdge>(&event)) {
    const bool positive = HasEdge(flip->u, flip->v);
    ToggleEdge(slots_.Find(flip->u), slots_.Find(flip->v), !positive);
    summary.degrees_touched = {flip->u, flip->v};
    summary.edge_delta = positive ? -1 : 1;
    return summary;
  }

  if (const auto* add = std::get_if<AddVertex>(&event)) {
    std::vector<VertexId> neighbors = add->neighbors;
    std::sort(neighbors.begin(), neighbors.end());
    neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    const Slot sx = slots_.Add(add->v);
    adjacency_.emplace_back();
    for (VertexId w : neighbors) {
      auto& list = adjacency_[slots_.Find(w)];
      list.insert(std::lower_bound(list.begin(), list.end(), add->v), add->v);
    }
    num_edges_ += neighbors.size();
    summary.edge_delta = static_cast<std::int64_t>(neighbors.size());
    summary.vertex_delta = 1;
    summary.degrees_touched = neighbors;
    summary.degrees_touched.push_back(add->v);
    adjacency_[sx] = std::move(neighbors);
    return summary;
  }

  const VertexId x = std::get<RemoveVertex>(event).v;
  const Slot sx = slots_.Find(x);
  std::vector<VertexId> former = std::move(adjacency_[sx]);
  for (VertexId w : former) {
    auto& list = adjacency_[slots_.Find(w)];
    list.erase(std::lower_bound(list.begin(), list.end(), x));
  }
  num_edges_ -= former.size();
  const VertexSlots::Removal removal = slots_.Remove(x);
  if (removal.moved_from) {
    adjacency_[removal.vacated] = std::move(adjacency_[*removal.moved_from]);
  }
  adjacency_.pop_back();
  summary.edge_delta = -static_cast<std::int64_t>(former.size());
  summary.vertex_delta = -1;
  summary.degrees_touched = std::move(former);
  return summary;
}

absl::Status SignedGraph::CheckInvariants() const {
  if (adjacency_.size() != slots_.size()) {
    return absl::InternalError("adjacency and slot table sizes differ");
  }
  std::size_t endpoint_total = 0;
  for (Slot s = 0; s < adjacency_.size(); ++s) {
    const VertexId v = slots_.IdAt(s);
    if (slots_.Find(v) != s) return absl::InternalError(absl::StrCat("slot map broken at ", v));
    const auto& list = adjacency_[s];
    endpoint_total += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const VertexId w = list[i];
      if (i > 0 && list[i - 1] >= w) {
        return absl::InternalError(absl::StrCat("adjacency of ", v, " not strictly increasing"));
      }
      if (w == v) return absl::InternalError(absl::StrCat("self-loop at ", v));
      const Slot sw = slots_.Find(w);
      if (sw == kNoSlot) {
        return absl::InternalError(absl::StrCat("edge ", v, "-", w, " to unknown vertex"));
      }
      const auto& back = adjacency_[sw];
      if (!std::binary_search(back.begin(), back.end(), v)) {
        return absl::InternalError(absl::StrCat("edge ", v, "-", w, " not symmetric"));
      }
    }
  }
  if (endpoint_total != 2 * num_edges_) {
    return absl::InternalError(
        absl::StrCat("edge count ", num_edges_, " but ", endpoint_total, " endpoints"));
  }
  return absl::OkStatus();
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (Slot s = 0; s < a.adjacency_.size(); ++s) {
    const Slot t = b.slots_.Find(a.slots_.IdAt(s));
    if (t == kNoSlot || a.adjacency_[s] != b.adjacency_[t]) return false;
  }
  return true;
}

}  // namespace icc
