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

#ifndef ICC_SIGNED_GRAPH_H_
#define ICC_SIGNED_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "icc/vertex_slots.h"

namespace icc {

// Number of common elements of two strictly increasing id lists. Iterates the
// shorter list; switches from a linear merge to binary probes into the longer
// list when the degrees are skewed.
std::size_t CountCommon(std::span<const VertexId> a, std::span<const VertexId> b);

// Update events. Query does not mutate the graph; it is carried here so that
// update streams can interleave clustering requests with mutations.
struct FlipEdge {
  VertexId u;
  VertexId v;
};
struct AddVertex {
  VertexId v;
  std::vector<VertexId> neighbors;
};
struct RemoveVertex {
  VertexId v;
};
struct Query {
  double epsilon;
};
using UpdateEvent = std::variant<FlipEdge, AddVertex, RemoveVertex, Query>;

struct MutationSummary {
  // Vertices whose positive degree changed, including an added vertex.
  std::vector<VertexId> degrees_touched;
  std::int64_t edge_delta = 0;
  std::int64_t vertex_delta = 0;
};

// Identifies one revision of one graph instance. Copies of a graph receive a
// fresh instance id, so an index built for one copy is stale for the other.
struct GraphVersion {
  std::uint64_t instance = 0;
  std::uint64_t revision = 0;
  friend bool operator==(const GraphVersion&, const GraphVersion&) = default;
};

// The positive subgraph of a complete signed graph. Every pair of vertices
// not joined by a stored edge is implicitly negative.
//
// Adjacency lists are open neighborhoods, strictly increasing by id. Reads
// are safe from many threads; mutations require exclusive access.
class SignedGraph {
 public:
  SignedGraph();
  SignedGraph(const SignedGraph& other);
  SignedGraph& operator=(const SignedGraph& other);
  SignedGraph(SignedGraph&&) noexcept = default;
  SignedGraph& operator=(SignedGraph&&) noexcept = default;

  // Builds a graph from undirected positive edges. Duplicate edges (in either
  // direction) and self-loops are ignored; every endpoint, and every id in
  // `isolated`, becomes a vertex.
  static SignedGraph FromEdges(std::span<const std::pair<VertexId, VertexId>> edges,
                               std::span<const VertexId> isolated = {});

  std::size_t num_vertices() const { return slots_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  bool HasVertex(VertexId v) const { return slots_.Contains(v); }
  // False when either endpoint is missing.
  bool HasEdge(VertexId u, VertexId v) const;

  absl::StatusOr<std::span<const VertexId>> Neighbors(VertexId v) const;
  absl::StatusOr<std::size_t> Degree(VertexId v) const;
  absl::StatusOr<std::size_t> IntersectionSize(VertexId u, VertexId v) const;

  // Vertex ids in ascending order.
  std::vector<VertexId> SortedVertices() const;
  // Each positive edge once, as (smaller id, larger id), sorted.
  std::vector<std::pair<VertexId, VertexId>> Edges() const;

  absl::Status Validate(const UpdateEvent& event) const;
  absl::StatusOr<MutationSummary> Apply(const UpdateEvent& event);

  // Full scan of symmetry, sortedness, self-loop and edge-count invariants.
  absl::Status CheckInvariants() const;

  GraphVersion version() const { return {instance_, revision_}; }

  // Slot-level access for algorithms that already resolved ids.
  const VertexSlots& slots() const { return slots_; }
  Slot SlotOf(VertexId v) const { return slots_.Find(v); }
  VertexId IdAt(Slot s) const { return slots_.IdAt(s); }
  std::span<const VertexId> NeighborsAt(Slot s) const { return adjacency_[s]; }
  std::size_t DegreeAt(Slot s) const { return adjacency_[s].size(); }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  void ToggleEdge(Slot su, Slot sv, bool add);

  VertexSlots slots_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t num_edges_ = 0;
  std::uint64_t instance_;
  std::uint64_t revision_ = 0;
};

}  // namespace icc

#endif  // ICC_SIGNED_GRAPH_H_
