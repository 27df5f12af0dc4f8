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

#ifndef ICC_CLUSTERING_H_
#define ICC_CLUSTERING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "icc/nao_index.h"
#include "icc/signed_graph.h"

namespace icc {

// A partition of a vertex set. Each vertex maps to the smallest id in its
// cluster, so two clusterings of the same vertex set describe the same
// partition iff their assignments are equal.
class Clustering {
 public:
  using Assignment = std::pair<VertexId, VertexId>;  // (vertex, label)

  Clustering() = default;

  // Accepts arbitrary labels (any value shared by exactly the members of a
  // cluster) and canonicalizes them. Fails on repeated vertices.
  static absl::StatusOr<Clustering> FromLabels(std::vector<Assignment> labels);

  // Every vertex of `g` in its own cluster.
  static Clustering Singletons(const SignedGraph& g);

  std::span<const Assignment> assignment() const { return assignment_; }
  std::size_t num_vertices() const { return assignment_.size(); }
  std::size_t num_clusters() const { return num_clusters_; }
  absl::StatusOr<VertexId> LabelOf(VertexId v) const;
  // Clusters as ascending member lists, ordered by label.
  std::vector<std::vector<VertexId>> Clusters() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  friend Clustering ClusteringFromRoots(const VertexSlots&, std::span<const std::uint32_t>);

  std::vector<Assignment> assignment_;  // sorted by vertex id
  std::size_t num_clusters_ = 0;
};

// Builds a canonical clustering from per-slot representative slots.
Clustering ClusteringFromRoots(const VertexSlots& slots, std::span<const std::uint32_t> roots);

// Counters gathered while clustering; identical between the two algorithms.
struct ClusteringStats {
  std::size_t agree_edges = 0;     // positive edges with distance < eps
  std::size_t light_vertices = 0;
  std::size_t heavy_vertices = 0;
  std::size_t kept_edges = 0;      // agreeing edges with a heavy endpoint
};

// Non-indexed algorithm: recomputes every distance, every agreement count
// and the lightness of every vertex, drops non-agreeing edges and edges
// between two light vertices, and returns the connected components.
Clustering CcBaseline(const SignedGraph& g, double eps, ClusteringStats* stats = nullptr);

// Same partition as CcBaseline, answered from the index: lightness in O(1)
// per vertex, then each heavy vertex unions with the agreeing prefix of its
// ordering. FailedPrecondition if the index is stale.
absl::StatusOr<Clustering> IccQuery(const NaoIndex& index, const SignedGraph& g, double eps,
                                    ClusteringStats* stats = nullptr);

// Min-disagree cost: positive edges cut between clusters plus negative pairs
// inside clusters. NotFound if a graph vertex is unassigned.
absl::StatusOr<std::uint64_t> ClusteringCost(const SignedGraph& g, const Clustering& c);

// InvalidArgument when the vertex sets differ.
absl::StatusOr<bool> SamePartition(const Clustering& a, const Clustering& b);

}  // namespace icc

#endif  // ICC_CLUSTERING_H_
