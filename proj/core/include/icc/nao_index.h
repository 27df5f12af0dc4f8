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

#ifndef ICC_NAO_INDEX_H_
#define ICC_NAO_INDEX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "icc/signed_graph.h"
#include "icc/vertex_slots.h"

namespace icc {

struct NaoEntry {
  VertexId neighbor;
  double distance;

  friend bool operator==(const NaoEntry&, const NaoEntry&) = default;
};

// Order of the per-vertex agreement lists: ascending distance, ties broken by
// ascending neighbor id.
inline bool NaoLess(const NaoEntry& a, const NaoEntry& b) {
  return a.distance < b.distance || (a.distance == b.distance && a.neighbor < b.neighbor);
}

struct IndexUpdateSummary {
  // Edges whose distance was recomputed, counting each undirected edge once.
  std::size_t edges_recomputed = 0;
  // List entries inserted, erased or moved to a new distance.
  std::size_t entries_changed = 0;
};

struct BuildOptions {
  // 0 or 1 builds on the calling thread.
  unsigned threads = 1;
};

// Per-vertex agreement orderings over the positive neighbors of every vertex.
//
// For each vertex the index keeps
//   * the ordering: (neighbor, distance) sorted by NaoLess, and
//   * a companion list of the same entries sorted by neighbor id, used to find
//     an entry's current distance (and thus its position in the ordering).
// The vertex itself is implicit at rank 1 with distance 0 and is not stored,
// so the index holds exactly 2m entries.
//
// An index is bound to one revision of one graph. Mutations must go through
// FlipEdge / AddVertex / RemoveVertex / Apply, which update both; any other
// graph mutation makes queries fail with FailedPrecondition.
class NaoIndex {
 public:
  NaoIndex() = default;

  static NaoIndex Build(const SignedGraph& g, BuildOptions options = {});

  // Builds from externally supplied orderings (e.g. a snapshot) and verifies
  // them against `g`; fails unless they equal what Build(g) would produce.
  static absl::StatusOr<NaoIndex> FromOrderings(
      const SignedGraph& g, std::vector<std::pair<VertexId, std::vector<NaoEntry>>> orderings);

  absl::Status CheckFresh(const SignedGraph& g) const;
  const GraphVersion& version() const { return version_; }

  std::size_t num_vertices() const { return slots_.size(); }
  std::size_t total_entries() const { return total_entries_; }
  bool HasVertex(VertexId v) const { return slots_.Contains(v); }

  absl::StatusOr<std::span<const NaoEntry>> Ordering(VertexId v) const;
  // Stored distance of edge {u, v}; nullopt when it is not a positive edge.
  std::optional<double> Distance(VertexId u, VertexId v) const;

  // ceil(eps * deg) + 1, the rank (counting the vertex itself as rank 1) whose
  // entry decides heaviness.
  static std::size_t LightnessThreshold(std::size_t degree, double eps);

  // Constant time. FailedPrecondition on a stale index.
  absl::StatusOr<bool> IsHeavy(const SignedGraph& g, VertexId v, double eps) const;

  // Number of entries of `v` with distance < eps (prefix length).
  std::size_t AgreePrefixAt(Slot s, double eps) const;

  absl::StatusOr<IndexUpdateSummary> FlipEdge(SignedGraph& g, VertexId u, VertexId v);
  absl::StatusOr<IndexUpdateSummary> AddVertex(SignedGraph& g, VertexId x,
                                               std::span<const VertexId> neighbors);
  absl::StatusOr<IndexUpdateSummary> RemoveVertex(SignedGraph& g, VertexId x);
  // Dispatches mutation events; Query events are validated and ignored.
  absl::StatusOr<IndexUpdateSummary> Apply(SignedGraph& g, const UpdateEvent& event);

  // Checks every structural invariant and recomputes every distance on `g`.
  absl::Status CheckConsistency(const SignedGraph& g) const;

  // Slot-level access for the query path. Slots are private to the index and
  // are not the graph's slots.
  const VertexSlots& slots() const { return slots_; }
  std::span<const NaoEntry> OrderingAt(Slot s) const { return lists_[s].ordered; }
  std::size_t DegreeAt(Slot s) const { return lists_[s].ordered.size(); }
  bool IsHeavyAt(Slot s, double eps) const;

  // Entry-for-entry, order-for-order comparison keyed by vertex id.
  friend bool operator==(const NaoIndex& a, const NaoIndex& b);
  // Human-readable description of the first difference, or nullopt if equal.
  static std::optional<std::string> FirstDifference(const NaoIndex& a, const NaoIndex& b);

 private:
  struct VertexLists {
    std::vector<NaoEntry> ordered;
    std::vector<NaoEntry> by_neighbor;
  };

  Slot AddSlot(VertexId v);
  void RemoveSlot(VertexId v);
  void Insert(Slot s, NaoEntry entry);
  void Erase(Slot s, VertexId neighbor);
  // Moves the entry for `neighbor` to `distance`. Returns false if unchanged.
  bool Reposition(Slot s, VertexId neighbor, double distance);
  // Recomputes edge {x, w} on the mutated graph and updates both lists.
  void Refresh(const SignedGraph& g, VertexId x, VertexId w, IndexUpdateSummary& summary);

  VertexSlots slots_;
  std::vector<VertexLists> lists_;
  std::size_t total_entries_ = 0;
  GraphVersion version_;
};

}  // namespace icc

#endif  // ICC_NAO_INDEX_H_
